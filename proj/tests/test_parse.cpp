#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folex/forms.hpp"
#include "folex/parse.hpp"

using namespace folex;

TEST_CASE("pencil form parses") {
  DiffForm f = parse_form("x0*dx1 - x1*dx0", 4);
  CHECK(f.form_degree() == 1);
  CHECK(f.component(mask_of({1})) == Poly::variable(4, 0));
  CHECK(f.component(mask_of({0})) == -Poly::variable(4, 1));
}

TEST_CASE("alternation collapses dx0^dx0") {
  CHECK(parse_form("dx0^dx0", 3).is_zero());
}

TEST_CASE("mixed coefficient degrees are a homogeneity error") {
  CHECK_THROWS_AS(parse_form_homogeneous("x0*dx1 + dx0", 4), ParseError);
  CHECK_NOTHROW(parse_form_homogeneous("x0*dx1 - x1*dx0", 4));
}

TEST_CASE("rational coefficients and exponents") {
  Poly p = parse_poly("3/2*x0^2*x1", 2);
  CHECK(p.str() == "3/2*x0^2*x1");
  CHECK(p.coeff({2, 1}) == Rat(3, 2));
}

TEST_CASE("parentheses and signs") {
  DiffForm a = parse_form("(x0 + x1)*(dx2 - dx3)", 4);
  DiffForm b = parse_form("x0*dx2 + x1*dx2 - x0*dx3 - x1*dx3", 4);
  CHECK(a == b);
  CHECK(parse_form("-x0*dx1", 2) == -parse_form("x0*dx1", 2));
}

TEST_CASE("variable inference and range checks") {
  DiffForm f = parse_form("x0*dx3 - x3*dx0");
  CHECK(f.n_vars() == 4);
  CHECK_THROWS_AS(parse_form("x5*dx0", 3), ParseError);
  CHECK_THROWS_AS(parse_form("x0 +", 2), ParseError);
  CHECK_THROWS_AS(parse_form("1/0", 2), ParseError);
}

TEST_CASE("error positions are reported") {
  try {
    parse_form("x0*dx1 + $", 2);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("round trip through str()") {
  DiffForm f = parse_form("x0*dx1 - x1*dx0 + x2*dx3 - x3*dx2", 4);
  CHECK(parse_form(f.str(), 4) == f);
}

TEST_CASE("mixed form degrees in a sum are rejected") {
  CHECK_THROWS_AS(parse_form("dx0 + dx1^dx2", 3), ParseError);
}
