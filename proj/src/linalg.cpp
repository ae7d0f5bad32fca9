#include "folex/linalg.hpp"

#include <stdexcept>

namespace folex {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols, int n_rows) {
  RatMatrix m(n_rows, static_cast<int>(cols.size()));
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    if (static_cast<int>(cols[j].size()) != n_rows)
      throw std::invalid_argument("from_columns: column length mismatch");
    for (int i = 0; i < n_rows; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("apply: dimension mismatch");
  RatVector r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<int> rref(RatMatrix& m) {
  const int rows = m.rows(), cols = m.cols();

  // Integer copy with denominators cleared per row.
  std::vector<std::vector<Int>> z(rows, std::vector<Int>(cols));
  for (int i = 0; i < rows; ++i) {
    Int lcm = 1;
    for (int j = 0; j < cols; ++j) {
      const Rat& e = m.at(i, j);
      if (e != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
    }
    for (int j = 0; j < cols; ++j) {
      Rat s = m.at(i, j) * Rat(lcm);
      z[i][j] = s.get_num();
    }
  }

  // Fraction-free forward elimination (one-step Bareiss).
  std::vector<int> pivots;
  Int prev = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (z[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(z[p], z[row]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int t = z[row][col] * z[i][j] - z[i][col] * z[row][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][col] = 0;
    }
    prev = z[row][col];
    pivots.push_back(col);
    ++row;
  }

  // Rational back substitution to reduced echelon form.
  std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols, Rat(0)));
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    for (int j = 0; j < cols; ++j) q[i][j] = Rat(z[i][j]);
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int pc = pivots[i];
    Rat inv = 1 / q[i][pc];
    for (int j = pc; j < cols; ++j) q[i][j] *= inv;
    for (int k = 0; k < i; ++k) {
      Rat factor = q[k][pc];
      if (factor == 0) continue;
      for (int j = pc; j < cols; ++j) q[k][j] -= factor * q[i][j];
    }
  }

  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = i < static_cast<int>(pivots.size()) ? q[i][j] : Rat(0);
  return pivots;
}

int rank(const RatMatrix& m) {
  RatMatrix c = m;
  return static_cast<int>(rref(c).size());
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<int> pivots = rref(r);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rat(0));
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_membership(const RatMatrix& span_cols, const RatVector& target) {
  if (static_cast<int>(target.size()) != span_cols.rows())
    throw std::invalid_argument("solve_membership: dimension mismatch");
  const int rows = span_cols.rows(), n = span_cols.cols();
  RatMatrix aug(rows, n + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = span_cols.at(i, j);
    aug.at(i, n) = target[i];
  }
  std::vector<int> pivots = rref(aug);
  for (int c : pivots)
    if (c == n) return std::nullopt;
  RatVector sol(n, Rat(0));
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) sol[pivots[i]] = aug.at(i, n);
  return sol;
}

std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, int dim) {
  RatMatrix m(static_cast<int>(vectors.size()), dim);
  for (int i = 0; i < static_cast<int>(vectors.size()); ++i) {
    if (static_cast<int>(vectors[i].size()) != dim)
      throw std::invalid_argument("canonical_basis: dimension mismatch");
    for (int j = 0; j < dim; ++j) m.at(i, j) = vectors[i][j];
  }
  std::vector<int> pivots = rref(m);
  std::vector<RatVector> out;
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
    RatVector row(dim);
    for (int j = 0; j < dim; ++j) row[j] = m.at(i, j);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<RatVector> subspace_intersection(const std::vector<RatVector>& a,
                                             const std::vector<RatVector>& b, int dim) {
  // Kernel vectors (u, v) of [A | B] give intersection elements A*u.
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  RatMatrix joint(dim, na + nb);
  for (int j = 0; j < na; ++j) {
    if (static_cast<int>(a[j].size()) != dim)
      throw std::invalid_argument("subspace_intersection: dimension mismatch");
    for (int i = 0; i < dim; ++i) joint.at(i, j) = a[j][i];
  }
  for (int j = 0; j < nb; ++j) {
    if (static_cast<int>(b[j].size()) != dim)
      throw std::invalid_argument("subspace_intersection: dimension mismatch");
    for (int i = 0; i < dim; ++i) joint.at(i, na + j) = b[j][i];
  }
  std::vector<RatVector> members;
  for (const RatVector& k : nullspace(joint)) {
    RatVector w(dim, Rat(0));
    for (int j = 0; j < na; ++j)
      if (k[j] != 0)
        for (int i = 0; i < dim; ++i) w[i] += k[j] * a[j][i];
    members.push_back(std::move(w));
  }
  return canonical_basis(members, dim);
}

}  // namespace folex
