#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folex/linalg.hpp"

using namespace folex;

namespace {

RatMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> d(-5, 5);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = Rat(d(rng));
  return m;
}

bool is_zero_vec(const RatVector& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("nullspace of identity is trivial") {
  RatMatrix m = RatMatrix::identity(3);
  CHECK(nullspace(m).empty());
}

TEST_CASE("nullspace of the zero map is everything") {
  RatMatrix m(2, 3);
  auto ns = nullspace(m);
  CHECK(ns.size() == 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(ns[j][j] == 1);
  }
}

TEST_CASE("nullspace of [[1,1,0],[0,0,1]]") {
  RatMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 2) = 1;
  auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  // Proportional to (1,-1,0); canonical form has 1 at the free column.
  CHECK(ns[0][0] == -1);
  CHECK(ns[0][1] == 1);
  CHECK(ns[0][2] == 0);
}

TEST_CASE("solve_membership against the identity") {
  RatMatrix id = RatMatrix::identity(3);
  RatVector t{Rat(1), Rat(2), Rat(3)};
  auto c = solve_membership(id, t);
  REQUIRE(c.has_value());
  CHECK(*c == t);
}

TEST_CASE("solve_membership NotInSpan") {
  RatMatrix m(2, 1);
  m.at(0, 0) = 1;
  RatVector t{Rat(0), Rat(1)};
  CHECK_FALSE(solve_membership(m, t).has_value());
}

TEST_CASE("solve_membership 2x2") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 1) = -1;
  RatVector t{Rat(2), Rat(0)};
  auto c = solve_membership(m, t);
  REQUIRE(c.has_value());
  CHECK((*c)[0] == 1);
  CHECK((*c)[1] == 1);
}

TEST_CASE("subspace_intersection basics") {
  RatVector e1{Rat(1), Rat(0), Rat(0)};
  RatVector e2{Rat(0), Rat(1), Rat(0)};
  RatVector e3{Rat(0), Rat(0), Rat(1)};

  auto same = subspace_intersection({e1}, {e1}, 3);
  REQUIRE(same.size() == 1);
  CHECK(same[0] == e1);

  CHECK(subspace_intersection({e1}, {e2}, 3).empty());

  auto mid = subspace_intersection({e1, e2}, {e2, e3}, 3);
  REQUIRE(mid.size() == 1);
  CHECK(mid[0] == e2);
}

TEST_CASE("subspace_intersection is symmetric") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    RatMatrix a = random_matrix(rng, 5, 3), b = random_matrix(rng, 5, 3);
    std::vector<RatVector> va, vb;
    for (int j = 0; j < 3; ++j) {
      RatVector ca(5), cb(5);
      for (int i = 0; i < 5; ++i) {
        ca[i] = a.at(i, j);
        cb[i] = b.at(i, j);
      }
      va.push_back(ca);
      vb.push_back(cb);
    }
    CHECK(subspace_intersection(va, vb, 5) == subspace_intersection(vb, va, 5));
  }
}

TEST_CASE("rank + nullity = cols on random matrices, and m*v = 0") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 2 + trial % 5, cols = 2 + (trial * 3) % 6;
    RatMatrix m = random_matrix(rng, rows, cols);
    auto ns = nullspace(m);
    CHECK(rank(m) + static_cast<int>(ns.size()) == cols);
    for (const auto& v : ns) CHECK(is_zero_vec(m.apply(v)));
  }
}

TEST_CASE("solve_membership reproduces the target on random spans") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix m = random_matrix(rng, 4, 3);
    RatVector c0{Rat(trial % 5 - 2), Rat(trial % 3), Rat(1)};
    RatVector target(4, Rat(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 3; ++j) target[i] += m.at(i, j) * c0[j];
    auto c = solve_membership(m, target);
    REQUIRE(c.has_value());
    for (int i = 0; i < 4; ++i) {
      Rat acc(0);
      for (int j = 0; j < 3; ++j) acc += m.at(i, j) * (*c)[j];
      CHECK(acc == target[i]);
    }
  }
}

TEST_CASE("canonical_basis gives reduced echelon rows") {
  RatVector v1{Rat(2), Rat(2), Rat(0)};
  RatVector v2{Rat(1), Rat(1), Rat(0)};
  auto b = canonical_basis({v1, v2}, 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0] == RatVector{Rat(1), Rat(1), Rat(0)});
}
