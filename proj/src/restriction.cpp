#include "folex/restriction.hpp"

#include <algorithm>
#include <stdexcept>

namespace folex {

namespace {

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Diagonal pattern Σ a_i x_i^d with every variable present: the partials
// d·a_i·x_i^{d-1} vanish simultaneously only at the origin.
bool diagonal_pattern(const Poly& f) {
  const int nv = f.n_vars();
  std::vector<bool> seen(nv, false);
  for (const auto& [m, c] : f.terms()) {
    int support = -1;
    for (int i = 0; i < nv; ++i) {
      if (m[i] == 0) continue;
      if (support >= 0) return false;  // mixed monomial
      support = i;
    }
    if (support < 0) return false;  // constant term
    seen[support] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

Hypersurface make_hypersurface(const Poly& f, bool smooth_asserted, bool irreducible_asserted) {
  if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 1)
    throw std::invalid_argument("hypersurface needs a nonzero homogeneous polynomial of degree >= 1");
  Hypersurface x;
  x.f = f;
  x.n = f.n_vars() - 1;
  x.degree = f.total_degree();
  for (int i = 0; i < f.n_vars(); ++i) x.gradient.push_back(f.partial_derivative(i));
  x.smooth_asserted = smooth_asserted;
  x.irreducible_asserted = irreducible_asserted;

  if (x.degree == 1 || diagonal_pattern(f)) {
    x.smoothness = Smoothness::CertifiedSmooth;
    return x;
  }

  // Deterministic sample battery: small integer points on f = 0.
  x.smoothness = Smoothness::Unknown;
  const int nv = f.n_vars();
  const int lo = -2, hi = 2;
  RatVector p(nv, Rat(0));
  long total = 1;
  for (int i = 0; i < nv; ++i) total *= (hi - lo + 1);
  bool found_point = false;
  for (long code = 1; code < total; ++code) {
    long c = code;
    for (int i = 0; i < nv; ++i) {
      p[i] = Rat(lo + static_cast<int>(c % (hi - lo + 1)));
      c /= (hi - lo + 1);
    }
    if (f.evaluate(p) != 0) continue;
    found_point = true;
    bool grad_zero = true;
    for (const Poly& g : x.gradient)
      if (g.evaluate(p) != 0) {
        grad_zero = false;
        break;
      }
    if (grad_zero) {
      x.smoothness = Smoothness::SingularPointFound;
      x.singular_sample = p;
      return x;
    }
  }
  if (found_point) x.smoothness = Smoothness::HeuristicallySmooth;
  return x;
}

Hypersurface fermat_hypersurface(int n, int d) {
  Poly f(n + 1);
  for (int i = 0; i <= n; ++i) {
    Mono m(n + 1, 0);
    m[i] = d;
    f.add_term(m, Rat(1));
  }
  return make_hypersurface(f);
}

bool is_invariant(const Hypersurface& x, const TwistedSection& s) {
  if (s.form.n_vars() != x.n + 1) throw std::invalid_argument("dimension mismatch");
  DiffForm df(x.n + 1, 1);
  for (int i = 0; i <= x.n; ++i) df.add_component(IndexMask(1) << i, x.gradient[i]);
  DiffForm w = wedge(df, s.form);
  for (const Poly& c : w.coefficient_list())
    if (!exact_divide(c, x.f)) return false;
  return true;
}

bool is_invariant_linear(const Hypersurface& x, const TwistedSection& s) {
  if (s.form.n_vars() != x.n + 1) throw std::invalid_argument("dimension mismatch");
  const int nv = x.n + 1;
  DiffForm df(nv, 1);
  for (int i = 0; i < nv; ++i) df.add_component(IndexMask(1) << i, x.gradient[i]);
  DiffForm w = wedge(df, s.form);
  if (w.is_zero()) return true;
  const int q1 = w.form_degree();
  const int e = s.coeff_degree() + x.degree - 1;  // coefficient degree of df∧ω
  // Columns: f times the monomial basis of V(n, q+1, e−d).
  std::vector<RatVector> cols;
  for (IndexMask t : tuples_lex(nv, q1)) {
    for (const Mono& m : monomials_of_degree(nv, e - x.degree)) {
      DiffForm gen(nv, q1);
      gen.add_component(t, Poly::monomial(nv, m, Rat(1)) * x.f);
      cols.push_back(monomial_coordinates(gen, e));
    }
  }
  if (cols.empty()) return false;
  RatMatrix span = RatMatrix::from_columns(cols, static_cast<int>(cols[0].size()));
  return solve_membership(span, monomial_coordinates(w, e)).has_value();
}

RestrictionVanishResult restriction_vanishes(const Hypersurface& x, const DiffForm& form, int twist) {
  RestrictionVanishResult res{};
  if (form.is_zero()) {
    res.vanishes = true;
    return res;
  }
  if (form.n_vars() != x.n + 1) throw std::invalid_argument("dimension mismatch");
  const int n = x.n, d = x.degree, q = form.form_degree(), k = twist;
  if (q > n - 1) {
    // Ω^q_X = 0 for q > dim X: the restriction vanishes identically.
    res.vanishes = true;
    res.trivially_top_degree = true;
    return res;
  }
  const int nv = n + 1;
  const int e = k - q;
  const int eb = k - q - d;       // coefficient degree of β
  const int eg = k - q - d + 1;   // coefficient degree of γ

  std::vector<RatVector> cols;
  const std::vector<IndexMask> tq = tuples_lex(nv, q);
  const std::vector<Mono> mb = monomials_of_degree(nv, eb);
  for (IndexMask t : tq)
    for (const Mono& m : mb) {
      DiffForm gen(nv, q);
      gen.add_component(t, Poly::monomial(nv, m, Rat(1)) * x.f);
      cols.push_back(monomial_coordinates(gen, e));
    }
  DiffForm df(nv, 1);
  for (int i = 0; i < nv; ++i) df.add_component(IndexMask(1) << i, x.gradient[i]);
  const std::vector<IndexMask> tq1 = tuples_lex(nv, q - 1);
  const std::vector<Mono> mg = monomials_of_degree(nv, eg);
  for (IndexMask t : tq1)
    for (const Mono& m : mg) {
      DiffForm gamma(nv, q - 1);
      gamma.add_component(t, Poly::monomial(nv, m, Rat(1)));
      cols.push_back(monomial_coordinates(wedge(df, gamma), e));
    }

  RatVector target = monomial_coordinates(form, e);
  if (cols.empty()) {
    res.vanishes = false;
    return res;
  }
  RatMatrix span = RatMatrix::from_columns(cols, static_cast<int>(target.size()));
  auto sol = solve_membership(span, target);
  if (!sol) {
    res.vanishes = false;
    return res;
  }
  res.vanishes = true;
  const size_t nb = tq.size() * mb.size();
  RatVector cb(sol->begin(), sol->begin() + nb);
  RatVector cg(sol->begin() + nb, sol->end());
  res.beta = form_from_coordinates(nv, q, eb, cb);
  DiffForm gamma(nv, q - 1);
  {
    size_t idx = 0;
    for (IndexMask t : tq1)
      for (const Mono& m : mg) gamma.add_component(t, Poly::monomial(nv, m, cg[idx++]));
  }
  res.gamma = gamma;
  return res;
}

RestrictionVanishResult restriction_vanishes(const Hypersurface& x, const TwistedSection& s) {
  return restriction_vanishes(x, s.form, s.twist);
}

long h0_bott(int n, int q, int k) {
  if (q < 0 || q > n) return 0;
  if (q == 0) return k < 0 ? 0 : binom(k + n, n);
  if (k <= q) return 0;
  return binom(k + n - q, k) * binom(k - 1, q);
}

namespace {

// The contraction matrix i_R : V(n,q,e) → V(n,q-1,e+1) is block diagonal
// over the combined multidegree (monomial exponents plus the index tuple);
// each block is assembled and its exact nullspace computed independently.
std::vector<RatVector> radial_kernel_blockwise(int n, int q, int k) {
  const int nv = n + 1, e = k - q;
  std::vector<RatVector> basis;
  if (e < 0 || q < 1 || q > nv) return basis;

  const std::vector<IndexMask> tq = tuples_lex(nv, q);
  const std::vector<Mono> me = monomials_of_degree(nv, e);
  const std::vector<IndexMask> tq1 = tuples_lex(nv, q - 1);
  const std::vector<Mono> me1 = monomials_of_degree(nv, e + 1);
  std::map<IndexMask, size_t> tq_pos, tq1_pos;
  for (size_t i = 0; i < tq.size(); ++i) tq_pos[tq[i]] = i;
  for (size_t i = 0; i < tq1.size(); ++i) tq1_pos[tq1[i]] = i;
  std::map<Mono, size_t> me_pos, me1_pos;
  for (size_t i = 0; i < me.size(); ++i) me_pos[me[i]] = i;
  for (size_t i = 0; i < me1.size(); ++i) me1_pos[me1[i]] = i;

  for (const Mono& c : monomials_of_degree(nv, k)) {
    // Source basis inside this block: tuples I with c_i >= 1 for all i in I.
    std::vector<std::pair<IndexMask, Mono>> sources;
    for (IndexMask t : tq) {
      Mono m = c;
      bool ok = true;
      for (int i : mask_indices(t)) {
        if (m[i] == 0) {
          ok = false;
          break;
        }
        m[i] -= 1;
      }
      if (ok) sources.emplace_back(t, m);
    }
    if (sources.empty()) continue;

    // Target basis: (J, c - 1_J) for (q-1)-tuples J inside the support.
    std::vector<std::pair<IndexMask, Mono>> targets;
    std::map<IndexMask, size_t> target_pos;
    for (IndexMask t : tq1) {
      Mono m = c;
      bool ok = true;
      for (int i : mask_indices(t)) {
        if (m[i] == 0) {
          ok = false;
          break;
        }
        m[i] -= 1;
      }
      if (ok) {
        target_pos[t] = targets.size();
        targets.emplace_back(t, m);
      }
    }

    RatMatrix block(static_cast<int>(targets.size()), static_cast<int>(sources.size()));
    for (size_t s = 0; s < sources.size(); ++s) {
      const IndexMask I = sources[s].first;
      int pos = 0;
      for (int i : mask_indices(I)) {
        const IndexMask J = I & ~(IndexMask(1) << i);
        block.at(static_cast<int>(target_pos.at(J)), static_cast<int>(s)) = Rat(pos % 2 == 0 ? 1 : -1);
        ++pos;
      }
    }
    for (const RatVector& kv : nullspace(block)) {
      RatVector global(tq.size() * me.size(), Rat(0));
      for (size_t s = 0; s < sources.size(); ++s) {
        if (kv[s] == 0) continue;
        const size_t idx = tq_pos.at(sources[s].first) * me.size() + me_pos.at(sources[s].second);
        global[idx] = kv[s];
      }
      basis.push_back(std::move(global));
    }
  }
  // Vectors from distinct blocks have disjoint supports, so the union is
  // already a basis; order it deterministically by leading coordinate.
  std::sort(basis.begin(), basis.end(), [](const RatVector& a, const RatVector& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      const bool za = a[i] == 0, zb = b[i] == 0;
      if (za != zb) return zb;
      if (!za) break;
    }
    return false;
  });
  return basis;
}

}  // namespace

std::vector<RatVector> h0_basis(int n, int q, int k) { return radial_kernel_blockwise(n, q, k); }

long h0_direct(int n, int q, int k) {
  if (q == 0) return k < 0 ? 0 : binom(k + n, n);
  return static_cast<long>(radial_kernel_blockwise(n, q, k).size());
}

RestrictionKernel restriction_kernel(const Hypersurface& x, int q, int k) {
  if (q < 1 || q > x.n - 1) throw std::invalid_argument("restriction_kernel needs 1 <= q <= n-1");
  const int n = x.n, d = x.degree, nv = n + 1, e = k - q;
  RestrictionKernel ker{n, q, k, d, {}, 0};

  std::vector<RatVector> ambient = h0_basis(n, q, k);
  ker.ambient_dim = static_cast<long>(ambient.size());
  if (ambient.empty()) return ker;

  std::vector<RatVector> gens;
  DiffForm df(nv, 1);
  for (int i = 0; i < nv; ++i) df.add_component(IndexMask(1) << i, x.gradient[i]);
  for (IndexMask t : tuples_lex(nv, q))
    for (const Mono& m : monomials_of_degree(nv, k - q - d)) {
      DiffForm gen(nv, q);
      gen.add_component(t, Poly::monomial(nv, m, Rat(1)) * x.f);
      gens.push_back(monomial_coordinates(gen, e));
    }
  for (IndexMask t : tuples_lex(nv, q - 1))
    for (const Mono& m : monomials_of_degree(nv, k - q - d + 1)) {
      DiffForm gamma(nv, q - 1);
      gamma.add_component(t, Poly::monomial(nv, m, Rat(1)));
      DiffForm w = wedge(df, gamma);
      if (!w.is_zero()) gens.push_back(monomial_coordinates(w, e));
    }
  if (gens.empty()) return ker;

  const int dim = static_cast<int>(ambient[0].size());
  for (const RatVector& v : subspace_intersection(ambient, gens, dim))
    ker.basis.push_back(make_section(form_from_coordinates(nv, q, e, v), n));
  return ker;
}

PoincareVerdict poincare_bound_check(const Hypersurface& x, const TwistedSection& s) {
  PoincareVerdict v{};
  v.invariant = is_invariant(x, s);
  v.consistent = !v.invariant || x.degree <= s.twist - s.q();
  return v;
}

}  // namespace folex
