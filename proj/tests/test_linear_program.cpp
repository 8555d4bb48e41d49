#include <gtest/gtest.h>

#include <random>

#include "c1cox/linear_program.hpp"

using namespace c1cox;

TEST(Simplex, WitnessSatisfiesSystem) {
  const std::vector<std::vector<Rational>> a{{1, 2, -1}, {0, 1, 1}};
  const std::vector<Rational> b{3, 2};
  const auto x = find_nonnegative_solution(a, b);
  ASSERT_TRUE(x.has_value());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      ASSERT_GE((*x)[j], 0);
      lhs += a[i][j] * (*x)[j];
    }
    EXPECT_EQ(lhs, b[i]);
  }
}

TEST(Simplex, Infeasible) {
  // x + y = -1 with x, y >= 0
  EXPECT_FALSE(find_nonnegative_solution({{1, 1}}, {-1}).has_value());
  // x - y = 1, x - y = 2
  EXPECT_FALSE(find_nonnegative_solution({{1, -1}, {1, -1}}, {1, 2}).has_value());
}

TEST(Simplex, DegenerateCycling) {
  // Beale-type degenerate system; Bland's rule must terminate
  const std::vector<std::vector<Rational>> a{
      {Rational(1, 4), -8, -1, 9, 1, 0, 0}, {Rational(1, 2), -12, Rational(-1, 2), 3, 0, 1, 0},
      {0, 0, 1, 0, 0, 0, 1}};
  EXPECT_TRUE(find_nonnegative_solution(a, {0, 0, 1}).has_value());
}

TEST(Feasibility, MembershipIn2dConesMatchesDeterminants) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> e(-5, 5);
  auto det = [](long a0, long a1, long b0, long b1) { return a0 * b1 - a1 * b0; };
  for (int trial = 0; trial < 300; ++trial) {
    const long a0 = e(rng), a1 = e(rng), b0 = e(rng), b1 = e(rng), v0 = e(rng), v1 = e(rng);
    const long ab = det(a0, a1, b0, b1);
    if (ab == 0) continue;
    FeasibilityProblem lp(2);
    lp.add_nonnegative(make_vector({a0, a1}));
    lp.add_nonnegative(make_vector({b0, b1}));
    lp.set_rhs(make_vector({v0, v1}));
    // v = s a + t b with s = det(v,b)/det(a,b), t = det(a,v)/det(a,b)
    const bool expected = det(v0, v1, b0, b1) * ab >= 0 && det(a0, a1, v0, v1) * ab >= 0;
    ASSERT_EQ(lp.feasible(), expected);
  }
}

TEST(Feasibility, FreeAndBoundedBelow) {
  FeasibilityProblem free_lp(1);
  free_lp.add_free(make_vector({1}));
  free_lp.set_rhs(make_vector({-3}));
  EXPECT_TRUE(free_lp.feasible());

  FeasibilityProblem at_least(1);
  at_least.add_at_least_one(make_vector({1}));
  at_least.set_rhs(make_vector({0}));
  EXPECT_FALSE(at_least.feasible());
}
