#include "folex/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace folex {

bool grevlex_less(const Mono& a, const Mono& b) {
  const int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  // Equal degree: a < b iff the last nonzero entry of a-b is positive.
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

Poly Poly::constant(int n_vars, const Rat& c) {
  Poly p(n_vars);
  p.add_term(Mono(n_vars, 0), c);
  return p;
}

Poly Poly::variable(int n_vars, int i) {
  if (i < 0 || i >= n_vars) throw std::invalid_argument("variable index out of range");
  Mono m(n_vars, 0);
  m[i] = 1;
  return monomial(n_vars, m, Rat(1));
}

Poly Poly::monomial(int n_vars, Mono m, const Rat& c) {
  if (static_cast<int>(m.size()) != n_vars) throw std::invalid_argument("monomial length mismatch");
  Poly p(n_vars);
  p.add_term(std::move(m), c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return mono_degree(terms_.begin()->first);  // leading term has max degree in grevlex
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = mono_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (mono_degree(m) != d) return false;
  return true;
}

const Mono& Poly::leading_mono() const {
  if (terms_.empty()) throw std::logic_error("leading_mono of zero polynomial");
  return terms_.begin()->first;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading_coeff of zero polynomial");
  return terms_.begin()->second;
}

Rat Poly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(m.size()) != nv_) throw std::invalid_argument("term length mismatch");
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nv_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nv_ != o.nv_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nv_ != o.nv_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nv_ != b.nv_) throw std::invalid_argument("variable count mismatch");
  Poly r(a.nv_);
  Mono m(a.nv_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.nv_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  Poly r(nv_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::partial_derivative(int i) const {
  if (i < 0 || i >= nv_) throw std::invalid_argument("variable index out of range");
  Poly r(nv_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Mono d = m;
    d[i] -= 1;
    r.add_term(d, c * m[i]);
  }
  return r;
}

Rat Poly::evaluate(const RatVector& point) const {
  if (static_cast<int>(point.size()) != nv_) throw std::invalid_argument("point length mismatch");
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nv_; ++i)
      for (int e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute_linear(const RatMatrix& m) const {
  if (m.rows() != nv_ || m.cols() != nv_) throw std::invalid_argument("matrix dimension mismatch");
  std::vector<Poly> images;
  for (int i = 0; i < nv_; ++i) {
    Poly li(nv_);
    for (int j = 0; j < nv_; ++j)
      if (m.at(i, j) != 0) li += Poly::variable(nv_, j) * m.at(i, j);
    images.push_back(std::move(li));
  }
  Poly r(nv_);
  for (const auto& [mono, c] : terms_) {
    Poly t = Poly::constant(nv_, c);
    for (int i = 0; i < nv_; ++i)
      for (int e = 0; e < mono[i]; ++e) t = t * images[i];
    r += t;
  }
  return r;
}

Poly Poly::substitute_var(int i, const Poly& value) const {
  if (value.n_vars() != nv_) throw std::invalid_argument("variable count mismatch");
  Poly r(nv_);
  for (const auto& [mono, c] : terms_) {
    Mono rest = mono;
    rest[i] = 0;
    Poly t = Poly::monomial(nv_, rest, c);
    for (int e = 0; e < mono[i]; ++e) t = t * value;
    r += t;
  }
  return r;
}

Poly Poly::dehomogenize(int chart) const {
  if (chart < 0 || chart >= nv_) throw std::invalid_argument("chart index out of range");
  Poly r(nv_ - 1);
  Mono m(nv_ - 1);
  for (const auto& [mono, c] : terms_) {
    for (int i = 0, j = 0; i < nv_; ++i)
      if (i != chart) m[j++] = mono[i];
    r.add_term(m, c);
  }
  return r;
}

Poly Poly::homogenize(int chart, int degree) const {
  if (chart < 0 || chart > nv_) throw std::invalid_argument("chart index out of range");
  Poly r(nv_ + 1);
  Mono m(nv_ + 1);
  for (const auto& [mono, c] : terms_) {
    const int pad = degree - mono_degree(mono);
    if (pad < 0) throw std::invalid_argument("homogenize: degree below total degree");
    for (int i = 0, j = 0; i <= nv_; ++i)
      m[i] = (i == chart) ? pad : mono[j++];
    r.add_term(m, c);
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (a != 1 || mono_degree(m) == 0) {
      out << a.get_str();
      printed = true;
    }
    for (int i = 0; i < nv_; ++i) {
      if (m[i] == 0) continue;
      if (printed) out << "*";
      out << "x" << i;
      if (m[i] > 1) out << "^" << m[i];
      printed = true;
    }
  }
  return out.str();
}

namespace {

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

std::optional<Poly> exact_divide(const Poly& g, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (g.n_vars() != f.n_vars()) throw std::invalid_argument("variable count mismatch");
  const int nv = g.n_vars();
  Poly rem = g, quot(nv);
  const Mono& lf = f.leading_mono();
  const Rat& cf = f.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& lr = rem.leading_mono();
    if (!mono_divides(lf, lr)) return std::nullopt;
    Mono d(nv);
    for (int i = 0; i < nv; ++i) d[i] = lr[i] - lf[i];
    Poly t = Poly::monomial(nv, d, rem.leading_coeff() / cf);
    quot += t;
    rem -= t * f;
  }
  return quot;
}

Poly normalize_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_coeff() < 0) scale = -scale;
  return p * scale;
}

namespace {

int degree_in(const Poly& p, int v) {
  int d = 0;
  for (const auto& [m, c] : p.terms()) d = std::max(d, m[v]);
  return d;
}

// Coefficient of x_v^e viewed as a polynomial in the remaining variables
// (kept in the full variable set, with x_v absent).
Poly coeff_in(const Poly& p, int v, int e) {
  Poly r(p.n_vars());
  for (const auto& [m, c] : p.terms()) {
    if (m[v] != e) continue;
    Mono q = m;
    q[v] = 0;
    r.add_term(q, c);
  }
  return r;
}

int lowest_variable(const Poly& a, const Poly& b) {
  for (int v = 0; v < a.n_vars(); ++v)
    if (degree_in(a, v) > 0 || degree_in(b, v) > 0) return v;
  return -1;
}

Poly gcd_rec(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, int v) {
  std::vector<Poly> coeffs;
  for (int e = 0; e <= degree_in(p, v); ++e) {
    Poly c = coeff_in(p, v, e);
    if (!c.is_zero()) coeffs.push_back(std::move(c));
  }
  Poly g = coeffs[0];
  for (size_t i = 1; i < coeffs.size(); ++i) g = gcd_rec(g, coeffs[i]);
  return g;
}

// Pseudo-remainder of a by b in the variable v.
Poly prem(Poly a, const Poly& b, int v) {
  const int db = degree_in(b, v);
  const Poly lb = coeff_in(b, v, db);
  while (!a.is_zero() && degree_in(a, v) >= db) {
    const int da = degree_in(a, v);
    Poly la = coeff_in(a, v, da);
    Mono shift(a.n_vars(), 0);
    shift[v] = da - db;
    a = a * lb - b * (la * Poly::monomial(a.n_vars(), shift, Rat(1)));
    if (!a.is_zero() && degree_in(a, v) == da) throw std::logic_error("prem failed to reduce");
  }
  return a;
}

// Primitive PRS in the lowest-index variable present.
Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  if (a.is_constant() || b.is_constant()) return Poly::constant(a.n_vars(), Rat(1));
  const int v = lowest_variable(a, b);
  if (v < 0) return Poly::constant(a.n_vars(), Rat(1));

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = *exact_divide(a, ca), pb = *exact_divide(b, cb);
  if (degree_in(pa, v) < degree_in(pb, v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = prem(pa, pb, v);
    if (!r.is_zero()) {
      Poly cr = content_in(r, v);
      r = *exact_divide(r, cr);
    }
    pa = std::move(pb);
    pb = std::move(r);
  }
  return normalize_primitive(gcd_rec(ca, cb) * pa);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("variable count mismatch");
  return gcd_rec(a, b);
}

Poly gcd_many(const std::vector<Poly>& ps) {
  Poly g(ps.empty() ? 0 : ps[0].n_vars());
  bool any = false;
  for (const Poly& p : ps) {
    if (p.is_zero()) continue;
    g = any ? poly_gcd(g, p) : p;
    any = true;
    if (g.is_constant()) break;
  }
  if (!any) throw std::invalid_argument("gcd_many: all inputs zero");
  return normalize_primitive(g);
}

std::vector<Mono> monomials_of_degree(int n_vars, int degree) {
  std::vector<Mono> out;
  if (degree < 0) return out;
  Mono m(n_vars, 0);
  // Depth-first enumeration, then sorted into descending grevlex.
  std::vector<std::pair<int, int>> stack;
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n_vars - 1) {
      m[pos] = left;
      out.push_back(m);
      return;
    }
    for (int e = left; e >= 0; --e) {
      m[pos] = e;
      rec(pos + 1, left - e);
    }
  };
  if (n_vars == 0) {
    if (degree == 0) out.push_back(m);
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const Mono& a, const Mono& b) { return grevlex_less(b, a); });
  return out;
}

}  // namespace folex
