#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folex/morse.hpp"
#include "folex/parse.hpp"

using namespace folex;

namespace {

Hypersurface chart_quadric() { return make_hypersurface(parse_poly("x1^2 + x2^2 - x0*x3", 4), true); }

ProbePoint origin(const Hypersurface& x) { return make_probe_point(x, 0, RatVector(3, Rat(0))); }

}  // namespace

TEST_CASE("probe point validation") {
  Hypersurface x = chart_quadric();
  CHECK_NOTHROW(origin(x));
  CHECK_THROWS_AS(make_probe_point(x, 0, RatVector{Rat(1), Rat(0), Rat(0)}), MorseError);
}

TEST_CASE("gauss map values") {
  Hypersurface q = make_hypersurface(parse_poly("x0*x3 - x1*x2", 4), true);
  CHECK(gauss_map_value(q, {Rat(1), Rat(0), Rat(0), Rat(0)}) ==
        std::vector<Int>{Int(0), Int(0), Int(0), Int(1)});

  Hypersurface h = make_hypersurface(parse_poly("x0", 4));
  CHECK(gauss_map_value(h, {Rat(0), Rat(1), Rat(2), Rat(3)}) ==
        std::vector<Int>{Int(1), Int(0), Int(0), Int(0)});

  Hypersurface c = fermat_hypersurface(3, 3);
  CHECK(gauss_map_value(c, {Rat(1), Rat(-1), Rat(0), Rat(0)}) ==
        std::vector<Int>{Int(1), Int(1), Int(0), Int(0)});

  // Singular point of the cone x1^2+x2^2-x0*x3 ... use x0*x1 at [0,0,1,1].
  Hypersurface sing = make_hypersurface(parse_poly("x0*x1", 4));
  CHECK_THROWS_AS(gauss_map_value(sing, {Rat(0), Rat(0), Rat(1), Rat(1)}), MorseError);
}

TEST_CASE("second fundamental form ranks") {
  // Mixed-sign diagonal quadrics (the definite one has no rational points).
  Hypersurface q3 = make_hypersurface(parse_poly("x0^2 + x1^2 - x2^2 - x3^2", 4), true);
  CHECK(second_fundamental_rank(q3, {Rat(3), Rat(4), Rat(5), Rat(0)}) == 2);
  CHECK(second_fundamental_rank(q3, {Rat(1), Rat(0), Rat(0), Rat(1)}) == 2);
  Hypersurface q4 = make_hypersurface(parse_poly("x0^2 + x1^2 + x2^2 - x3^2 - x4^2", 5), true);
  CHECK(second_fundamental_rank(q4, {Rat(3), Rat(4), Rat(0), Rat(5), Rat(0)}) == 3);
  CHECK(second_fundamental_rank(q4, {Rat(1), Rat(2), Rat(2), Rat(3), Rat(0)}) == 3);

  Hypersurface c = fermat_hypersurface(3, 3);
  CHECK(second_fundamental_rank(c, {Rat(1), Rat(-1), Rat(0), Rat(0)}) == 0);
  CHECK(second_fundamental_rank(c, {Rat(1), Rat(-1), Rat(2), Rat(-2)}) == 2);
}

TEST_CASE("sff rank is invariant under rescaling") {
  Hypersurface c = fermat_hypersurface(3, 3);
  Hypersurface c7 = make_hypersurface(c.f * Rat(7), true);
  RatVector p{Rat(1), Rat(-1), Rat(2), Rat(-2)};
  RatVector p3{Rat(3), Rat(-3), Rat(6), Rat(-6)};
  CHECK(second_fundamental_rank(c7, p) == 2);
  CHECK(second_fundamental_rank(c, p3) == 2);
}

TEST_CASE("morse classification on the chart quadric") {
  Hypersurface x = chart_quadric();
  // In the x0 chart the surface is x0^2 + x1^2 - x2 = 0 (renamed variables).
  MorseReport r = morse_classify(x, parse_poly("x2 + x0^2", 3), origin(x));
  CHECK(r.critical);
  CHECK(r.verdict == MorseReport::Verdict::Morse);
  CHECK(r.multiplier == Rat(-1));
  CHECK(r.determinant == Rat(8));
  REQUIRE(r.restricted_hessian.size() == 2);
  CHECK(r.restricted_hessian[0] == RatVector{Rat(4), Rat(0)});
  CHECK(r.restricted_hessian[1] == RatVector{Rat(0), Rat(2)});

  MorseReport fib = morse_classify(x, parse_poly("x2", 3), origin(x));
  CHECK(fib.verdict == MorseReport::Verdict::Morse);
  CHECK(fib.multiplier == Rat(-1));
  CHECK(fib.restricted_hessian[0] == RatVector{Rat(2), Rat(0)});
  CHECK(fib.restricted_hessian[1] == RatVector{Rat(0), Rat(2)});

  MorseReport nc = morse_classify(x, parse_poly("x0", 3), origin(x));
  CHECK(nc.verdict == MorseReport::Verdict::NotCritical);
  CHECK_FALSE(nc.critical);

  MorseReport deg = morse_classify(x, parse_poly("x2 + x0^2 - x1^2", 3), origin(x));
  CHECK(deg.verdict == MorseReport::Verdict::Degenerate);
}

TEST_CASE("morse verdict is invariant under rescaling the integral") {
  Hypersurface x = chart_quadric();
  Poly g = parse_poly("x2 + x0^2", 3);
  MorseReport r1 = morse_classify(x, g, origin(x));
  MorseReport r3 = morse_classify(x, g * Rat(3), origin(x));
  CHECK(r1.verdict == r3.verdict);
  CHECK(r3.determinant == r1.determinant * Rat(9));  // scales by c'^{n-1}
}

TEST_CASE("lambda family on adapted instances") {
  Hypersurface x = chart_quadric();
  ProbePoint p = origin(x);

  LambdaFamily diag = lambda_family(x, parse_poly("x2", 3), p, 2);
  CHECK(diag.degree == 2);
  CHECK(diag.det_coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(4)});  // (2λ)^2
  CHECK(diag.bad_lambdas == std::vector<Rat>{Rat(0)});

  LambdaFamily pm = lambda_family(x, parse_poly("x2 + x0^2 - x1^2", 3), p, 2);
  CHECK(pm.det_coeffs == std::vector<Rat>{Rat(-4), Rat(0), Rat(4)});  // 4λ^2 - 4
  CHECK(pm.bad_lambdas == std::vector<Rat>{Rat(-1), Rat(1)});

  LambdaFamily off = lambda_family(x, parse_poly("x2 + 2*x0*x1", 3), p, 2);
  CHECK(off.det_coeffs == std::vector<Rat>{Rat(-4), Rat(0), Rat(4)});
  CHECK(off.bad_lambdas == std::vector<Rat>{Rat(-1), Rat(1)});
}

TEST_CASE("lambda family for n = 4: (2λ)^3") {
  // x0 chart of x1^2+x2^2+x3^2-x0*x4 = 0 in P4.
  Hypersurface x = make_hypersurface(parse_poly("x1^2 + x2^2 + x3^2 - x0*x4", 5), true);
  ProbePoint p = make_probe_point(x, 0, RatVector(4, Rat(0)));
  LambdaFamily fam = lambda_family(x, parse_poly("x3", 4), p, 3);
  CHECK(fam.degree == 3);
  CHECK(fam.det_coeffs == std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(8)});
  CHECK(fam.bad_lambdas == std::vector<Rat>{Rat(0)});
}

TEST_CASE("the two lambda code paths agree at rational points") {
  Hypersurface x = chart_quadric();
  ProbePoint p = origin(x);
  Poly g = parse_poly("x2 + x0^2 - x1^2", 3);
  LambdaFamily fam = lambda_family(x, g, p, 2);
  for (const Rat& l0 : {Rat(2), Rat(-3), Rat(1, 2), Rat(5), Rat(-7, 3)}) {
    Poly gl = lambda_instance(x, g, p, 2, l0);
    MorseReport r = morse_classify(x, gl, p);
    CHECK(r.critical);
    CHECK(r.determinant == fam.evaluate(l0));
  }
}

TEST_CASE("lambda family error conditions") {
  Hypersurface x = chart_quadric();
  ProbePoint p = origin(x);
  // Pivot with zero linear coefficient.
  CHECK_THROWS_AS(lambda_family(x, parse_poly("x2", 3), p, 0), MorseError);
  // Non-adapted frame: in the x3 chart the gradient at the origin points
  // along the first coordinate, not the last.
  ProbePoint py = make_probe_point(x, 3, RatVector(3, Rat(0)));
  CHECK_THROWS_AS(lambda_family(x, parse_poly("x2", 3), py, 2), MorseError);
}

TEST_CASE("radial direction is in the kernel of the constrained Hessian") {
  // Euler identity: Hess f(p) * p = (d-1) * grad f(p), so the radial
  // direction pairs to zero against ker df(p).
  Hypersurface c = fermat_hypersurface(3, 3);
  RatVector p{Rat(1), Rat(-1), Rat(2), Rat(-2)};
  std::vector<RatVector> hess(4, RatVector(4, Rat(0)));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      hess[i][j] = c.gradient[i].partial_derivative(j).evaluate(p);
  RatVector grad(4);
  for (int i = 0; i < 4; ++i) grad[i] = c.gradient[i].evaluate(p);
  for (int i = 0; i < 4; ++i) {
    Rat acc(0);
    for (int j = 0; j < 4; ++j) acc += hess[i][j] * p[j];
    CHECK(acc == grad[i] * Rat(2));
  }
}
