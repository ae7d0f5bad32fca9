#ifndef FOLEX_LINALG_HPP
#define FOLEX_LINALG_HPP

#include <optional>
#include <vector>

#include "folex/rational.hpp"

namespace folex {

using RatVector = std::vector<Rat>;

// Dense matrix of exact rationals. Dimensions are fixed at construction.
class RatMatrix {
 public:
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Rat& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  static RatMatrix identity(int n);
  static RatMatrix from_columns(const std::vector<RatVector>& cols, int n_rows);

  RatVector apply(const RatVector& v) const;  // m * v

  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// In-place reduced row-echelon form. Elimination is fraction-free (Bareiss)
// on a denominator-cleared integer copy, with rational normalization at the
// end. Returns the pivot columns, chosen left to right.
std::vector<int> rref(RatMatrix& m);

int rank(const RatMatrix& m);

// Canonical kernel basis: one vector per free column in ascending column
// order, each with entry 1 at its own free coordinate. The span is the full
// kernel and the basis is the reduced echelon basis of the kernel.
std::vector<RatVector> nullspace(const RatMatrix& m);

// Solves span_cols * c = target. Returns the echelon-canonical solution
// (free coordinates zero), or nullopt when the target is not in the span.
std::optional<RatVector> solve_membership(const RatMatrix& span_cols, const RatVector& target);

// RREF of the given vectors viewed as rows; zero rows dropped. This is the
// canonical basis of their span.
std::vector<RatVector> canonical_basis(const std::vector<RatVector>& vectors, int dim);

// Canonical basis of span(a) ∩ span(b). Vectors must share a common length.
std::vector<RatVector> subspace_intersection(const std::vector<RatVector>& a,
                                             const std::vector<RatVector>& b, int dim);

}  // namespace folex

#endif
