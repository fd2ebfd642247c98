#include <doctest.h>

#include <random>

#include "monideal/lp.hpp"
#include "oracles.hpp"

using namespace mi;

namespace {

LinearConstraint ge(std::vector<Rational> c, Rational rhs) {
  return {std::move(c), Relation::GreaterEqual, std::move(rhs)};
}

} // namespace

TEST_SUITE("lp") {

TEST_CASE("small optimum") {
  // min x + y, x + 2y >= 2, 2x + y >= 2: optimum 4/3 at (2/3, 2/3).
  LinearProgram lp{2, {1, 1}, {ge({1, 2}, 2), ge({2, 1}, 2)}};
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == Rational(4, 3));
  CHECK(r.x[0] == Rational(2, 3));
}

TEST_CASE("equality and upper bounds") {
  // min -x subject to x + y = 3, x <= 2.
  LinearProgram lp{2, {-1, 0},
                   {{{1, 1}, Relation::Equal, 3}, {{1, 0}, Relation::LessEqual, 2}}};
  const auto r = solve(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == -2);
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram bad{1, {1}, {{{1}, Relation::LessEqual, -1}}};
  CHECK(solve(bad).status == LpStatus::Infeasible);
  LinearProgram open{2, {-1, 0}, {ge({1, -1}, 0)}};
  CHECK(solve(open).status == LpStatus::Unbounded);
}

TEST_CASE("covering programs agree with vertex enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 4;
    std::vector<Rational> c(n);
    for (auto& v : c) {
      v = 1 + static_cast<int>(rng() % 4);
    }
    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n));
    std::vector<Rational> rhs(m);
    LinearProgram lp{n, c, {}};
    for (std::size_t i = 0; i < m; ++i) {
      for (auto& v : A[i]) {
        v = static_cast<int>(rng() % 3);
      }
      A[i][rng() % n] += 1;
      rhs[i] = 1 + static_cast<int>(rng() % 3);
      lp.constraints.push_back(ge(A[i], rhs[i]));
    }
    const auto r = solve(lp);
    const auto ref = oracle::lp_vertex_min(c, A, rhs);
    REQUIRE(ref.has_value());
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == *ref);
  }
}

}
