#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folex/parse.hpp"
#include "folex/restriction.hpp"
#include "generators.hpp"

using namespace folex;
using folex::testgen::random_section;

namespace {

DiffForm omega_fg(const Poly& f, const Poly& g) {
  const int nv = f.n_vars();
  DiffForm out(nv, 1);
  int df = f.total_degree(), dg = g.total_degree();
  for (int i = 0; i < nv; ++i) {
    Poly c = g * f.partial_derivative(i) * Rat(dg) - f * g.partial_derivative(i) * Rat(df);
    if (!c.is_zero()) out += DiffForm::dx(nv, i) * c;
  }
  return out;
}

}  // namespace

TEST_CASE("make_hypersurface smoothness verdicts") {
  CHECK(fermat_hypersurface(4, 4).smoothness == Smoothness::CertifiedSmooth);
  CHECK(make_hypersurface(parse_poly("x0", 4)).smoothness == Smoothness::CertifiedSmooth);
  Hypersurface sing = make_hypersurface(parse_poly("x0*x1", 3));
  CHECK(sing.smoothness == Smoothness::SingularPointFound);
  CHECK(sing.singular_sample.has_value());
  CHECK_THROWS(make_hypersurface(parse_poly("x0 + x1^2", 2)));
  CHECK_THROWS(make_hypersurface(Poly(3)));
}

TEST_CASE("invariance: hyperplane under the pencil") {
  Hypersurface x = make_hypersurface(parse_poly("x0", 4));
  TwistedSection s = make_section(parse_form("x0*dx1 - x1*dx0", 4), 3);
  CHECK(is_invariant(x, s));
  CHECK(is_invariant_linear(x, s));
}

TEST_CASE("invariance: omega_fg leaves f invariant") {
  Poly f = parse_poly("x0^2 + x1*x2 + x3^2", 4);
  Poly g = parse_poly("x0 + x3", 4);
  Hypersurface x = make_hypersurface(f, true);
  TwistedSection s = make_section(omega_fg(f, g), 3);
  CHECK(is_invariant(x, s));
  CHECK(is_invariant_linear(x, s));
}

TEST_CASE("high-degree hypersurfaces are never invariant (bound regime)") {
  std::mt19937 rng(31);
  for (int n : {3, 4}) {
    Hypersurface x = fermat_hypersurface(n, 4);
    for (int trial = 0; trial < 5; ++trial) {
      TwistedSection s = random_section(rng, n, 1, 3);  // k-q = 2 < d = 4
      CHECK_FALSE(is_invariant(x, s));
    }
  }
}

TEST_CASE("the two invariance tests agree on random pairs") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3;
    Hypersurface x = fermat_hypersurface(n, 2 + trial % 2);
    TwistedSection s = random_section(rng, n, 1 + trial % 2, 3 + trial % 2);
    CHECK(is_invariant(x, s) == is_invariant_linear(x, s));
  }
}

TEST_CASE("restriction_vanishes with reassembled witness") {
  Poly f = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4);
  Hypersurface x = make_hypersurface(f);
  Poly g = parse_poly("x1", 4);
  TwistedSection s = make_section(omega_fg(f, g), 3);
  RestrictionVanishResult r = restriction_vanishes(x, s);
  CHECK(r.vanishes);
  CHECK_FALSE(r.trivially_top_degree);
  REQUIRE(r.beta.has_value());
  REQUIRE(r.gamma.has_value());
  DiffForm df(4, 1);
  for (int i = 0; i < 4; ++i)
    if (!f.partial_derivative(i).is_zero()) df += DiffForm::dx(4, i) * f.partial_derivative(i);
  DiffForm reassembled = *r.beta * f + wedge(df, *r.gamma);
  CHECK(reassembled == s.form);
}

TEST_CASE("contact form does not restrict to zero on the quadric") {
  Hypersurface x = fermat_hypersurface(3, 2);
  TwistedSection eta = make_section(parse_form("x0*dx1 - x1*dx0 + x2*dx3 - x3*dx2", 4), 3);
  CHECK_FALSE(restriction_vanishes(x, eta).vanishes);
}

TEST_CASE("top-degree forms restrict to zero structurally") {
  // q = n exceeds dim X = n-1, so the restriction vanishes for any X.
  VectorField r5 = VectorField::radial(5);
  DiffForm eta = interior_product(
      r5, DiffForm::wedge_basis(5, {0, 1, 2}) + DiffForm::wedge_basis(5, {2, 3, 4}));
  DiffForm etaeta = wedge(eta, eta);
  CHECK_FALSE(etaeta.is_zero());
  Hypersurface x = fermat_hypersurface(4, 3);
  RestrictionVanishResult r = restriction_vanishes(x, etaeta, 6);
  CHECK(r.vanishes);
  CHECK(r.trivially_top_degree);
}

TEST_CASE("restriction kernel: quadric in P3 at (q,k)=(1,2) is injective") {
  RestrictionKernel k = restriction_kernel(fermat_hypersurface(3, 2), 1, 2);
  CHECK(k.dim() == 0);
  CHECK(k.injective());
  CHECK(k.ambient_dim == 6);
}

TEST_CASE("restriction kernel: witnesses at k = d+1") {
  Hypersurface x = fermat_hypersurface(3, 2);
  RestrictionKernel k = restriction_kernel(x, 1, 3);
  CHECK(k.dim() >= 4);
  for (const TwistedSection& s : k.basis) {
    RestrictionVanishResult r = restriction_vanishes(x, s);
    CHECK(r.vanishes);
    DiffForm df(4, 1);
    for (int i = 0; i < 4; ++i) df += DiffForm::dx(4, i) * x.gradient[i];
    CHECK(*r.beta * x.f + wedge(df, *r.gamma) == s.form);
  }
  // Each omega_{f,x_i} lies in the kernel.
  for (int i = 0; i < 4; ++i) {
    TwistedSection w = make_section(omega_fg(x.f, Poly::variable(4, i)), 3);
    CHECK(restriction_vanishes(x, w).vanishes);
  }
}

TEST_CASE("restriction kernel: Fermat quartic P4 3-forms at k=6 injective") {
  RestrictionKernel k = restriction_kernel(fermat_hypersurface(4, 4), 3, 6);
  CHECK(k.dim() == 0);
}

TEST_CASE("Bott dimensions: closed formula vs direct kernels") {
  CHECK(h0_bott(3, 1, 2) == 6);
  CHECK(h0_direct(3, 1, 2) == 6);
  CHECK(h0_bott(4, 2, 3) == 10);
  CHECK(h0_direct(4, 2, 3) == 10);
  CHECK(h0_direct(4, 1, 2) == 10);
  CHECK(h0_bott(3, 3, 3) == 0);
  CHECK(h0_direct(3, 3, 3) == 0);
  for (int n = 2; n <= 4; ++n)
    for (int q = 1; q <= n; ++q) CHECK(h0_bott(n, q, q) == 0);
}

TEST_CASE("poincare bound verdicts") {
  Hypersurface hyper = make_hypersurface(parse_poly("x0", 4));
  TwistedSection pencil = make_section(parse_form("x0*dx1 - x1*dx0", 4), 3);
  PoincareVerdict v = poincare_bound_check(hyper, pencil);
  CHECK(v.invariant);
  CHECK(v.consistent);

  Poly f = parse_poly("x0^2 + x1*x2 + x3^2", 4);
  Poly g = parse_poly("x0 + x1", 4);
  Hypersurface x = make_hypersurface(f, true);
  TwistedSection w = make_section(omega_fg(f, g), 3);
  PoincareVerdict v2 = poincare_bound_check(x, w);
  CHECK(v2.invariant);
  CHECK(v2.consistent);

  std::mt19937 rng(37);
  Hypersurface fq = fermat_hypersurface(3, 4);
  for (int trial = 0; trial < 10; ++trial) {
    TwistedSection s = random_section(rng, 3, 1, 3);
    PoincareVerdict pv = poincare_bound_check(fq, s);
    CHECK_FALSE(pv.invariant);
    CHECK(pv.consistent);
  }
}

TEST_CASE("restriction_vanishes implies is_invariant on smooth x") {
  Poly f = parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4);
  Hypersurface x = make_hypersurface(f);
  TwistedSection s = make_section(omega_fg(f, parse_poly("x2", 4)), 3);
  CHECK(restriction_vanishes(x, s).vanishes);
  CHECK(is_invariant(x, s));
}
