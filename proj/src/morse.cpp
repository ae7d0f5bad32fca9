#include "folex/morse.hpp"

#include <algorithm>

namespace folex {

namespace {

RatVector eval_gradient(const std::vector<Poly>& grad, const RatVector& p) {
  RatVector g;
  for (const Poly& gi : grad) g.push_back(gi.evaluate(p));
  return g;
}

bool all_zero(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r == 0; });
}

std::vector<Poly> chart_gradient(const Poly& p) {
  std::vector<Poly> g;
  for (int i = 0; i < p.n_vars(); ++i) g.push_back(p.partial_derivative(i));
  return g;
}

// Canonical basis of {v : <w,v> = 0} via the kernel of the 1×n matrix w.
std::vector<RatVector> gradient_kernel(const RatVector& w) {
  RatMatrix m(1, static_cast<int>(w.size()));
  for (size_t j = 0; j < w.size(); ++j) m.at(0, static_cast<int>(j)) = w[j];
  return nullspace(m);
}

std::vector<RatVector> hessian_at(const Poly& h, const RatVector& p) {
  const int n = h.n_vars();
  std::vector<RatVector> hess(n, RatVector(n));
  for (int i = 0; i < n; ++i) {
    Poly hi = h.partial_derivative(i);
    for (int j = 0; j < n; ++j) hess[i][j] = hi.partial_derivative(j).evaluate(p);
  }
  return hess;
}

std::vector<RatVector> gram(const std::vector<RatVector>& hess, const std::vector<RatVector>& basis) {
  const int m = static_cast<int>(basis.size()), n = static_cast<int>(hess.size());
  std::vector<RatVector> g(m, RatVector(m, Rat(0)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (basis[a][i] != 0 && hess[i][j] != 0 && basis[b][j] != 0)
            g[a][b] += basis[a][i] * hess[i][j] * basis[b][j];
  return g;
}

Rat det_rat(std::vector<RatVector> m) {
  const int n = static_cast<int>(m.size());
  Rat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int r = c + 1; r < n; ++r) {
      Rat f = m[r][c] / m[c][c];
      if (f == 0) continue;
      for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace

ProbePoint make_probe_point(const Hypersurface& x, int chart, RatVector coords) {
  if (chart < 0 || chart > x.n) throw MorseError(MorseError::Code::ChartMismatch, "chart out of range");
  if (static_cast<int>(coords.size()) != x.n)
    throw MorseError(MorseError::Code::ChartMismatch, "affine point needs n coordinates");
  Poly fhat = x.f.dehomogenize(chart);
  if (fhat.evaluate(coords) != 0)
    throw MorseError(MorseError::Code::NotOnHypersurface, "point does not lie on X");
  if (all_zero(eval_gradient(chart_gradient(fhat), coords)))
    throw MorseError(MorseError::Code::SingularPoint, "gradient vanishes at the point");
  return ProbePoint{chart, std::move(coords)};
}

std::vector<Int> gauss_map_value(const Hypersurface& x, const RatVector& p) {
  if (static_cast<int>(p.size()) != x.n + 1)
    throw MorseError(MorseError::Code::ChartMismatch, "projective point needs n+1 coordinates");
  if (x.f.evaluate(p) != 0)
    throw MorseError(MorseError::Code::NotOnHypersurface, "point does not lie on X");
  RatVector g = eval_gradient(x.gradient, p);
  if (all_zero(g)) throw MorseError(MorseError::Code::SingularPoint, "gradient vanishes at the point");
  Int lcm = 1;
  for (const Rat& c : g) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> z;
  for (const Rat& c : g) {
    Rat s = c * Rat(lcm);
    z.push_back(s.get_num());
  }
  Int gcd = 0;
  for (const Int& v : z) mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.get_mpz_t());
  int sign = 1;
  for (const Int& v : z)
    if (v != 0) {
      sign = v < 0 ? -1 : 1;
      break;
    }
  for (Int& v : z) v = v * sign / gcd;
  return z;
}

int second_fundamental_rank(const Hypersurface& x, const RatVector& p) {
  if (static_cast<int>(p.size()) != x.n + 1)
    throw MorseError(MorseError::Code::ChartMismatch, "projective point needs n+1 coordinates");
  if (x.f.evaluate(p) != 0)
    throw MorseError(MorseError::Code::NotOnHypersurface, "point does not lie on X");
  RatVector g = eval_gradient(x.gradient, p);
  if (all_zero(g)) throw MorseError(MorseError::Code::SingularPoint, "gradient vanishes at the point");
  std::vector<RatVector> hess = hessian_at(x.f, p);
  std::vector<RatVector> kernel = gradient_kernel(g);
  // The radial direction lies in ker df(p) and pairs to zero with it, so the
  // rank of the Gram matrix is already the rank on the quotient.
  std::vector<RatVector> gm = gram(hess, kernel);
  RatMatrix m(static_cast<int>(gm.size()), static_cast<int>(gm.size()));
  for (size_t i = 0; i < gm.size(); ++i)
    for (size_t j = 0; j < gm.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = gm[i][j];
  return rank(m);
}

const char* verdict_str(MorseReport::Verdict v) {
  switch (v) {
    case MorseReport::Verdict::Morse:
      return "Morse";
    case MorseReport::Verdict::Degenerate:
      return "Degenerate";
    case MorseReport::Verdict::NotCritical:
      return "NotCritical";
  }
  return "?";
}

MorseReport morse_classify(const Hypersurface& x, const Poly& g_chart, const ProbePoint& p) {
  if (g_chart.n_vars() != x.n) throw MorseError(MorseError::Code::ChartMismatch, "first integral must be an affine chart polynomial");
  Poly fhat = x.f.dehomogenize(p.chart);
  RatVector gf = eval_gradient(chart_gradient(fhat), p.coords);
  RatVector gg = eval_gradient(chart_gradient(g_chart), p.coords);
  if (all_zero(gf)) throw MorseError(MorseError::Code::SingularPoint, "gradient vanishes at the point");

  MorseReport rep{};
  // Multiplier c with ∇ĝ = c·∇f̂, if it exists.
  int i0 = 0;
  while (gf[i0] == 0) ++i0;
  Rat c = gg[i0] / gf[i0];
  for (int i = 0; i < x.n; ++i)
    if (gg[i] != c * gf[i]) {
      rep.verdict = MorseReport::Verdict::NotCritical;
      rep.critical = false;
      return rep;
    }
  rep.critical = true;
  rep.multiplier = c;

  Poly h = g_chart - x.f.dehomogenize(p.chart) * c;
  rep.restricted_hessian = gram(hessian_at(h, p.coords), gradient_kernel(gf));
  rep.determinant = det_rat(rep.restricted_hessian);
  rep.verdict = rep.determinant != 0 ? MorseReport::Verdict::Morse : MorseReport::Verdict::Degenerate;
  return rep;
}

namespace {

// Shared construction of the pivot substitution x_k -> p_k +
// (1/a_k)(−Σ_{i≠k} a_i (x_i − p_i) + λ (x_last − p_last)) in the given
// variable space; `lambda` is a polynomial in that space (a constant for the
// numeric path, the extra variable for the symbolic one).
Poly pivot_image(int nv, const RatVector& p, const RatVector& a, int pivot, const Poly& lambda,
                 const Poly& last_centered) {
  const int n = static_cast<int>(a.size());
  Poly img = Poly::constant(nv, Rat(p[pivot]));
  for (int i = 0; i < n; ++i) {
    if (i == pivot) continue;
    Poly centered = Poly::variable(nv, i) - Poly::constant(nv, p[i]);
    img += centered * (-a[i] / a[pivot]);
  }
  img += lambda * last_centered * (1 / Rat(a[pivot]));
  return img;
}

std::vector<std::vector<Poly>> poly_hessian_at(const Poly& h, const RatVector& point_ext, int n_affine) {
  // Second partials in the affine variables, evaluated at the point with the
  // symbolic variable left free: substitute the affine coordinates only.
  std::vector<std::vector<Poly>> hess(n_affine, std::vector<Poly>(n_affine, Poly(h.n_vars())));
  for (int i = 0; i < n_affine; ++i)
    for (int j = 0; j < n_affine; ++j) {
      Poly s = h.partial_derivative(i).partial_derivative(j);
      for (int v = 0; v < n_affine; ++v) s = s.substitute_var(v, Poly::constant(h.n_vars(), point_ext[v]));
      hess[i][j] = s;
    }
  return hess;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::vector<int> cols, int row, int nv) {
  if (cols.empty()) return Poly::constant(nv, Rat(1));
  Poly acc(nv);
  for (size_t t = 0; t < cols.size(); ++t) {
    std::vector<int> rest = cols;
    rest.erase(rest.begin() + t);
    Poly minor = poly_det(m, rest, row + 1, nv);
    Poly term = m[row][cols[t]] * minor;
    acc += (t % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

Rat LambdaFamily::evaluate(const Rat& lambda) const {
  Rat acc(0);
  for (int i = static_cast<int>(det_coeffs.size()) - 1; i >= 0; --i) acc = acc * lambda + det_coeffs[i];
  return acc;
}

LambdaFamily lambda_family(const Hypersurface& x, const Poly& g_chart, const ProbePoint& p, int pivot) {
  const int n = x.n;
  if (g_chart.n_vars() != n) throw MorseError(MorseError::Code::ChartMismatch, "first integral must be an affine chart polynomial");
  Poly fhat = x.f.dehomogenize(p.chart);
  RatVector gf = eval_gradient(chart_gradient(fhat), p.coords);
  if (all_zero(gf)) throw MorseError(MorseError::Code::SingularPoint, "gradient vanishes at the point");
  for (int i = 0; i + 1 < n; ++i)
    if (gf[i] != 0)
      throw MorseError(MorseError::Code::TangentFrameNotAdapted,
                       "chart frame must have the tangent space spanned by the first n-1 coordinates");
  RatVector a = eval_gradient(chart_gradient(g_chart), p.coords);
  if (pivot < 0 || pivot >= n || a[pivot] == 0) {
    bool any = std::any_of(a.begin(), a.end(), [](const Rat& r) { return r != 0; });
    throw MorseError(MorseError::Code::ZeroLinearPart,
                     any ? "pivot coefficient a_k is zero" : "linear part of the integral vanishes at p");
  }

  // Work in n+1 variables with λ as the trailing variable.
  const int nv = n + 1;
  auto lift = [&](const Poly& q) {
    Poly r(nv);
    for (const auto& [m, c] : q.terms()) {
      Mono e = m;
      e.push_back(0);
      r.add_term(e, c);
    }
    return r;
  };
  Poly gl = lift(g_chart), fl = lift(fhat);
  Poly lambda = Poly::variable(nv, n);
  Poly last_centered = Poly::variable(nv, n - 1) - Poly::constant(nv, p.coords[n - 1]);
  Poly g_lam = gl.substitute_var(pivot, pivot_image(nv, p.coords, a, pivot, lambda, last_centered));

  RatVector point_ext = p.coords;  // affine coordinates; λ stays symbolic

  // Multiplier c(λ): the transformed gradient at p is λ·a_n_dir on the last
  // coordinate only, matched against ∇f̂(p) = (0,...,0,μ).
  Poly grad_last = g_lam.partial_derivative(n - 1);
  for (int v = 0; v < n; ++v) grad_last = grad_last.substitute_var(v, Poly::constant(nv, point_ext[v]));
  Poly c_lam = grad_last * (1 / gf[n - 1]);

  Poly h = g_lam - fl * c_lam;
  std::vector<std::vector<Poly>> hess = poly_hessian_at(h, point_ext, n);

  // Kernel of ∇f̂(p) in the adapted frame: the first n-1 coordinates.
  std::vector<int> cols;
  for (int i = 0; i + 1 < n; ++i) cols.push_back(i);
  std::vector<std::vector<Poly>> sub(n - 1, std::vector<Poly>(n - 1, Poly(nv)));
  for (int i = 0; i + 1 < n; ++i)
    for (int j = 0; j + 1 < n; ++j) sub[i][j] = hess[i][j];
  std::vector<int> all_cols;
  for (int i = 0; i + 1 < n; ++i) all_cols.push_back(i);
  Poly detp = poly_det(sub, all_cols, 0, nv);

  LambdaFamily fam{};
  int deg = 0;
  for (const auto& [m, c] : detp.terms()) deg = std::max(deg, m[n]);
  fam.det_coeffs.assign(deg + 1, Rat(0));
  for (const auto& [m, c] : detp.terms()) fam.det_coeffs[m[n]] += c;
  while (fam.det_coeffs.size() > 1 && fam.det_coeffs.back() == 0) fam.det_coeffs.pop_back();
  fam.degree = static_cast<int>(fam.det_coeffs.size()) - 1;

  // Rational roots of the determinant polynomial.
  if (fam.degree >= 1 || fam.det_coeffs[0] == 0) {
    std::vector<Rat> coeffs = fam.det_coeffs;
    size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low > 0 && low < coeffs.size()) fam.bad_lambdas.push_back(Rat(0));
    if (low < coeffs.size() && low + 1 <= static_cast<size_t>(fam.degree)) {
      Int den_lcm = 1;
      for (size_t i = low; i < coeffs.size(); ++i)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeffs[i].get_den().get_mpz_t());
      Int trail = Int(Rat(coeffs[low] * Rat(den_lcm)).get_num());
      Int lead = Int(Rat(coeffs.back() * Rat(den_lcm)).get_num());
      auto divisors = [](Int v) {
        std::vector<Int> out;
        v = abs(v);
        for (Int i = 1; i * i <= v; ++i)
          if (v % i == 0) {
            out.push_back(i);
            out.push_back(v / i);
          }
        return out;
      };
      for (const Int& pnum : divisors(trail))
        for (const Int& qden : divisors(lead))
          for (int s : {1, -1}) {
            Rat cand(pnum * s, qden);
            cand.canonicalize();
            if (fam.evaluate(cand) == 0 &&
                std::find(fam.bad_lambdas.begin(), fam.bad_lambdas.end(), cand) == fam.bad_lambdas.end())
              fam.bad_lambdas.push_back(cand);
          }
      std::sort(fam.bad_lambdas.begin(), fam.bad_lambdas.end());
    }
  }
  return fam;
}

Poly lambda_instance(const Hypersurface& x, const Poly& g_chart, const ProbePoint& p, int pivot,
                     const Rat& lambda0) {
  const int n = x.n;
  if (g_chart.n_vars() != n) throw MorseError(MorseError::Code::ChartMismatch, "first integral must be an affine chart polynomial");
  RatVector a = eval_gradient(chart_gradient(g_chart), p.coords);
  if (pivot < 0 || pivot >= n || a[pivot] == 0)
    throw MorseError(MorseError::Code::ZeroLinearPart, "pivot coefficient a_k is zero");
  Poly lam = Poly::constant(n, lambda0);
  Poly last_centered = Poly::variable(n, n - 1) - Poly::constant(n, p.coords[n - 1]);
  return g_chart.substitute_var(pivot, pivot_image(n, p.coords, a, pivot, lam, last_centered));
}

}  // namespace folex
