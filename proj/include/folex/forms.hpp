#ifndef FOLEX_FORMS_HPP
#define FOLEX_FORMS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "folex/poly.hpp"

namespace folex {

// Strictly increasing index tuples are encoded as bitmasks over the
// variables; bit i set means the factor dx_i is present.
using IndexMask = std::uint32_t;

int mask_size(IndexMask m);
std::vector<int> mask_indices(IndexMask m);
IndexMask mask_of(const std::vector<int>& indices);
std::string mask_str(IndexMask m);

// Sign of dx_a ∧ dx_b when both are written with increasing indices;
// 0 when the masks intersect. The single home of all sign bookkeeping.
int merge_sign(IndexMask a, IndexMask b);

// All q-element index tuples over n_vars variables, in lexicographic
// tuple order (the global basis order).
std::vector<IndexMask> tuples_lex(int n_vars, int q);

// Exterior q-form with polynomial coefficients on C^{n_vars}.
class DiffForm {
 public:
  DiffForm(int n_vars, int q);

  static DiffForm dx(int n_vars, int i);
  static DiffForm wedge_basis(int n_vars, const std::vector<int>& indices);  // dx_{i1}∧...∧dx_{iq}

  int n_vars() const { return nv_; }
  int form_degree() const { return q_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<IndexMask, Poly>& components() const { return comps_; }
  Poly component(IndexMask m) const;

  // Common coefficient degree; -1 for the zero form. Throws when the
  // stored coefficients are not homogeneous of one degree.
  int coeff_degree() const;
  bool coeffs_homogeneous() const;

  void add_component(IndexMask m, const Poly& coeff);  // canonicalizing
  std::vector<Poly> coefficient_list() const;

  DiffForm operator-() const;
  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  DiffForm operator*(const Poly& p) const;
  DiffForm operator*(const Rat& c) const;
  bool operator==(const DiffForm& o) const;

  std::string str() const;

 private:
  int nv_, q_;
  std::map<IndexMask, Poly> comps_;
};

// Polynomial vector field on C^{n_vars}.
class VectorField {
 public:
  explicit VectorField(int n_vars) : nv_(n_vars), comps_(n_vars, Poly(n_vars)) {}
  VectorField(int n_vars, std::vector<Poly> comps);

  static VectorField radial(int n_vars);                 // R = Σ x_i ∂/∂x_i
  static VectorField coordinate(int n_vars, int i);      // ∂/∂x_i

  int n_vars() const { return nv_; }
  const Poly& component(int i) const { return comps_[i]; }

 private:
  int nv_;
  std::vector<Poly> comps_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& a);
DiffForm interior_product(const VectorField& v, const DiffForm& a);

// Dimension of V(n,q,e): q-forms on C^{n+1} with degree-e coefficients.
long v_dim(int n, int q, int e);

// Coordinates in the canonical basis {monomial · dx_I}, ordered by
// (index tuple lex, monomial grevlex). The form must be zero or have
// homogeneous coefficients of degree e.
RatVector monomial_coordinates(const DiffForm& a, int e);
DiffForm form_from_coordinates(int n_vars, int q, int e, const RatVector& coords);

}  // namespace folex

#endif
