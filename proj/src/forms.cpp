#include "folex/forms.hpp"

#include <bit>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace folex {

int mask_size(IndexMask m) { return std::popcount(m); }

std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (m & (IndexMask(1) << i)) out.push_back(i);
  return out;
}

IndexMask mask_of(const std::vector<int>& indices) {
  IndexMask m = 0;
  for (int i : indices) m |= IndexMask(1) << i;
  return m;
}

std::string mask_str(IndexMask m) {
  std::ostringstream out;
  bool first = true;
  for (int i : mask_indices(m)) {
    if (!first) out << "^";
    out << "dx" << i;
    first = false;
  }
  return out.str();
}

int merge_sign(IndexMask a, IndexMask b) {
  if (a & b) return 0;
  // Count inversions: pairs (i in a, j in b) with j < i.
  int inv = 0;
  for (int i : mask_indices(a)) {
    IndexMask below = b & ((IndexMask(1) << i) - 1);
    inv += std::popcount(below);
  }
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<IndexMask> tuples_lex(int n_vars, int q) {
  std::vector<IndexMask> out;
  if (q < 0 || q > n_vars) return out;
  std::vector<int> idx(q);
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == q) {
      out.push_back(mask_of(idx));
      return;
    }
    for (int i = start; i < n_vars; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return out;
}

DiffForm::DiffForm(int n_vars, int q) : nv_(n_vars), q_(q) {
  if (q < 0 || q > n_vars) throw std::invalid_argument("form degree out of range");
}

DiffForm DiffForm::dx(int n_vars, int i) { return wedge_basis(n_vars, {i}); }

DiffForm DiffForm::wedge_basis(int n_vars, const std::vector<int>& indices) {
  DiffForm f(n_vars, static_cast<int>(indices.size()));
  // Sort the factors, tracking the permutation sign; a repeat gives zero.
  std::vector<int> idx = indices;
  int sign = 1;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return f;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  f.add_component(mask_of(idx), Poly::constant(n_vars, Rat(sign)));
  return f;
}

Poly DiffForm::component(IndexMask m) const {
  auto it = comps_.find(m);
  return it == comps_.end() ? Poly(nv_) : it->second;
}

int DiffForm::coeff_degree() const {
  if (comps_.empty()) return -1;
  int d = -2;
  for (const auto& [m, p] : comps_) {
    if (!p.is_homogeneous()) throw std::invalid_argument("inhomogeneous coefficient");
    if (d == -2)
      d = p.total_degree();
    else if (p.total_degree() != d)
      throw std::invalid_argument("coefficients of mixed degrees");
  }
  return d;
}

bool DiffForm::coeffs_homogeneous() const {
  int d = -2;
  for (const auto& [m, p] : comps_) {
    if (!p.is_homogeneous()) return false;
    if (d == -2)
      d = p.total_degree();
    else if (p.total_degree() != d)
      return false;
  }
  return true;
}

void DiffForm::add_component(IndexMask m, const Poly& coeff) {
  if (mask_size(m) != q_) throw std::invalid_argument("tuple length mismatch");
  if (coeff.n_vars() != nv_) throw std::invalid_argument("variable count mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = comps_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

std::vector<Poly> DiffForm::coefficient_list() const {
  std::vector<Poly> out;
  for (const auto& [m, p] : comps_) out.push_back(p);
  return out;
}

DiffForm DiffForm::operator-() const {
  DiffForm r(nv_, q_);
  for (const auto& [m, p] : comps_) r.comps_.emplace(m, -p);
  return r;
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (nv_ != o.nv_ || q_ != o.q_) throw std::invalid_argument("form shape mismatch");
  for (const auto& [m, p] : o.comps_) add_component(m, p);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) {
  if (nv_ != o.nv_ || q_ != o.q_) throw std::invalid_argument("form shape mismatch");
  for (const auto& [m, p] : o.comps_) add_component(m, -p);
  return *this;
}

DiffForm DiffForm::operator*(const Poly& p) const {
  DiffForm r(nv_, q_);
  for (const auto& [m, c] : comps_) r.add_component(m, c * p);
  return r;
}

DiffForm DiffForm::operator*(const Rat& c) const {
  DiffForm r(nv_, q_);
  if (c == 0) return r;
  for (const auto& [m, p] : comps_) r.comps_.emplace(m, p * c);
  return r;
}

bool DiffForm::operator==(const DiffForm& o) const {
  return nv_ == o.nv_ && q_ == o.q_ && comps_ == o.comps_;
}

std::string DiffForm::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (IndexMask m : tuples_lex(nv_, q_)) {
    auto it = comps_.find(m);
    if (it == comps_.end()) continue;
    if (!first) out << " + ";
    first = false;
    if (q_ == 0) {
      out << it->second.str();
    } else {
      out << "(" << it->second.str() << ")*" << mask_str(m);
    }
  }
  return out.str();
}

VectorField::VectorField(int n_vars, std::vector<Poly> comps) : nv_(n_vars), comps_(std::move(comps)) {
  if (static_cast<int>(comps_.size()) != nv_) throw std::invalid_argument("component count mismatch");
  for (const Poly& p : comps_)
    if (p.n_vars() != nv_) throw std::invalid_argument("variable count mismatch");
}

VectorField VectorField::radial(int n_vars) {
  std::vector<Poly> comps;
  for (int i = 0; i < n_vars; ++i) comps.push_back(Poly::variable(n_vars, i));
  return VectorField(n_vars, std::move(comps));
}

VectorField VectorField::coordinate(int n_vars, int i) {
  std::vector<Poly> comps(n_vars, Poly(n_vars));
  comps[i] = Poly::constant(n_vars, Rat(1));
  return VectorField(n_vars, std::move(comps));
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("variable count mismatch");
  const int q = a.form_degree() + b.form_degree();
  if (q > a.n_vars()) return DiffForm(a.n_vars(), a.n_vars());  // zero form of top degree
  DiffForm r(a.n_vars(), q);
  for (const auto& [ma, pa] : a.components()) {
    for (const auto& [mb, pb] : b.components()) {
      const int s = merge_sign(ma, mb);
      if (s == 0) continue;
      r.add_component(ma | mb, (pa * pb) * Rat(s));
    }
  }
  return r;
}

DiffForm exterior_derivative(const DiffForm& a) {
  if (a.form_degree() == a.n_vars()) return DiffForm(a.n_vars(), a.n_vars());
  DiffForm r(a.n_vars(), a.form_degree() + 1);
  for (const auto& [m, p] : a.components()) {
    for (int i = 0; i < a.n_vars(); ++i) {
      Poly dp = p.partial_derivative(i);
      if (dp.is_zero()) continue;
      const IndexMask di = IndexMask(1) << i;
      const int s = merge_sign(di, m);
      if (s == 0) continue;
      r.add_component(di | m, dp * Rat(s));
    }
  }
  return r;
}

DiffForm interior_product(const VectorField& v, const DiffForm& a) {
  if (v.n_vars() != a.n_vars()) throw std::invalid_argument("variable count mismatch");
  if (a.form_degree() == 0) return DiffForm(a.n_vars(), 0);
  DiffForm r(a.n_vars(), a.form_degree() - 1);
  for (const auto& [m, p] : a.components()) {
    int pos = 0;
    for (int i : mask_indices(m)) {
      const Poly& vi = v.component(i);
      if (!vi.is_zero()) {
        Poly c = p * vi;
        if (pos % 2 != 0) c = -c;
        r.add_component(m & ~(IndexMask(1) << i), c);
      }
      ++pos;
    }
  }
  return r;
}

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long v_dim(int n, int q, int e) {
  if (e < 0 || q < 0 || q > n + 1) return 0;
  return binom(n + 1, q) * binom(e + n, n);
}

RatVector monomial_coordinates(const DiffForm& a, int e) {
  if (!a.coeffs_homogeneous() || (!a.is_zero() && a.coeff_degree() != e))
    throw std::invalid_argument("monomial_coordinates: inhomogeneous input");
  const int nv = a.n_vars(), q = a.form_degree();
  const std::vector<Mono> monos = monomials_of_degree(nv, e);
  const std::vector<IndexMask> tuples = tuples_lex(nv, q);
  RatVector coords(tuples.size() * monos.size(), Rat(0));
  for (size_t t = 0; t < tuples.size(); ++t) {
    auto it = a.components().find(tuples[t]);
    if (it == a.components().end()) continue;
    for (size_t m = 0; m < monos.size(); ++m) coords[t * monos.size() + m] = it->second.coeff(monos[m]);
  }
  return coords;
}

DiffForm form_from_coordinates(int n_vars, int q, int e, const RatVector& coords) {
  const std::vector<Mono> monos = monomials_of_degree(n_vars, e);
  const std::vector<IndexMask> tuples = tuples_lex(n_vars, q);
  if (coords.size() != tuples.size() * monos.size())
    throw std::invalid_argument("form_from_coordinates: length mismatch");
  DiffForm f(n_vars, q);
  for (size_t t = 0; t < tuples.size(); ++t) {
    Poly p(n_vars);
    for (size_t m = 0; m < monos.size(); ++m) p.add_term(monos[m], coords[t * monos.size() + m]);
    f.add_component(tuples[t], p);
  }
  return f;
}

}  // namespace folex
