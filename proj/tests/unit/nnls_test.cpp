#include <gtest/gtest.h>

#include <random>

#include "kplane/nnls.hpp"
#include "oracles.hpp"

using namespace kplane;

TEST(Nnls, MatchesActiveSetEnumeration) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 6 + trial % 5, k = 2 + trial % 6;
    Mat a(m, k);
    Vec b(m);
    for (int i = 0; i < m; ++i) {
      b(i) = nd(rng);
      for (int j = 0; j < k; ++j) a(i, j) = nd(rng);
    }
    const auto r = nnls(a, b);
    ASSERT_TRUE(r.converged);
    const Vec o = oracle::nnls_brute(a, b);
    EXPECT_GE(r.x.minCoeff(), 0.0);
    EXPECT_NEAR(r.residual_norm, (a * o - b).norm(), 1e-10);
    EXPECT_LT((r.x - o).norm(), 1e-8);
  }
}

TEST(LeastDistance, FeasibleMinimumNorm) {
  // x >= 1 and y >= 2: closest point to 0 is (1, 2)
  Mat g = Mat::Identity(2, 2);
  Vec h(2);
  h << 1, 2;
  const auto r = least_distance(g, h);
  ASSERT_TRUE(r.feasible);
  EXPECT_NEAR(r.x(0), 1.0, 1e-12);
  EXPECT_NEAR(r.x(1), 2.0, 1e-12);
}

TEST(LeastDistance, RandomProblemsSatisfyConstraints) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 20; ++trial) {
    Mat g(8, 4);
    Vec h(8);
    for (int i = 0; i < 8; ++i) {
      h(i) = nd(rng);
      for (int j = 0; j < 4; ++j) g(i, j) = nd(rng);
    }
    const auto r = least_distance(g, h);
    if (r.feasible) EXPECT_GE((g * r.x - h).minCoeff(), -1e-9);
  }
}

TEST(LeastDistance, DetectsInfeasibility) {
  // x >= 1 and -x >= 0
  Mat g(2, 1);
  g << 1, -1;
  Vec h(2);
  h << 1, 0;
  EXPECT_FALSE(least_distance(g, h).feasible);
}
