#ifndef FOLEX_POLY_HPP
#define FOLEX_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folex/linalg.hpp"
#include "folex/rational.hpp"

namespace folex {

// Exponent vector; length equals the variable count of the owning Poly.
using Mono = std::vector<int>;

inline int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// Graded reverse lexicographic order, fixed globally for term iteration,
// printing and monomial-basis enumeration.
bool grevlex_less(const Mono& a, const Mono& b);

struct GrevlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return grevlex_less(b, a); }
};

// Sparse multivariate polynomial with exact rational coefficients.
// No zero coefficients are stored; terms iterate in descending grevlex.
class Poly {
 public:
  using TermMap = std::map<Mono, Rat, GrevlexGreater>;

  explicit Poly(int n_vars = 0) : nv_(n_vars) {}

  static Poly constant(int n_vars, const Rat& c);
  static Poly variable(int n_vars, int i);
  static Poly monomial(int n_vars, Mono m, const Rat& c);

  int n_vars() const { return nv_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // max over terms; -1 for zero
  bool is_homogeneous() const;
  const TermMap& terms() const { return terms_; }

  const Mono& leading_mono() const;
  const Rat& leading_coeff() const;
  Rat coeff(const Mono& m) const;

  void add_term(const Mono& m, const Rat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return nv_ == o.nv_ && terms_ == o.terms_; }

  Poly partial_derivative(int i) const;
  Rat evaluate(const RatVector& point) const;

  // p composed with x -> m*x, i.e. x_i replaced by sum_j m(i,j) x_j.
  Poly substitute_linear(const RatMatrix& m) const;
  // x_i replaced by an arbitrary polynomial in the same variables.
  Poly substitute_var(int i, const Poly& value) const;
  // Sets x_chart = 1 and drops the variable; indices above chart shift down.
  Poly dehomogenize(int chart) const;
  // Inverse chart passage: inserts x_chart and pads every term up to the
  // common degree (the given degree must be >= the total degree).
  Poly homogenize(int chart, int degree) const;

  std::string str() const;

 private:
  int nv_;
  TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Quotient h with g = f*h, or nullopt when f does not divide g exactly.
std::optional<Poly> exact_divide(const Poly& g, const Poly& f);

// GCD normalized primitive over the integers with positive leading
// coefficient in the global term order; constant 1 for coprime inputs.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly gcd_many(const std::vector<Poly>& ps);

// Primitive integer normalization with positive leading coefficient.
Poly normalize_primitive(const Poly& p);

// All exponent vectors of the given total degree, descending grevlex.
std::vector<Mono> monomials_of_degree(int n_vars, int degree);

}  // namespace folex

#endif
