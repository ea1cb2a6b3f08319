#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kplane/quadrature.hpp"
#include "oracles.hpp"

using namespace kplane;

TEST(GaussLegendre, MatchesGolubWelsch) {
  for (int m : {2, 5, 16, 40}) {
    const auto& r = quad::gauss_legendre(m);
    const auto o = oracle::gauss_legendre(m, -1.0, 1.0);
    for (int i = 0; i < m; ++i) {
      EXPECT_NEAR(r.nodes[i], o.nodes[i], 1e-13);
      EXPECT_NEAR(r.weights[i], o.weights[i], 1e-13);
    }
  }
}

TEST(GaussLegendre, PolynomialExactness) {
  const auto r = quad::gauss_legendre(6, 0.0, 2.0);
  for (int d = 0; d <= 11; ++d) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], d);
    EXPECT_NEAR(s, std::pow(2.0, d + 1) / (d + 1), 1e-11 * std::pow(2.0, d));
  }
}

TEST(SphereRule, AreaAndMoments) {
  for (int dim = 1; dim <= 4; ++dim) {
    const auto r = quad::sphere_rule(dim, 24);
    EXPECT_NEAR(r.weights.sum(), oracle::sphere_area(dim), 1e-11) << dim;
    if (dim >= 2) {
      double m2 = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) m2 += r.weights(i) * r.points(0, i) * r.points(0, i);
      EXPECT_NEAR(m2, oracle::sphere_area(dim) / dim, 1e-11);
    }
  }
}

TEST(BallRule, VolumeAndGaussian) {
  for (int dim = 1; dim <= 4; ++dim) {
    const auto r = quad::ball_rule_polar(dim, 2.0, 32);
    EXPECT_NEAR(r.weights.sum(), quad::unit_ball_volume(dim) * std::pow(2.0, dim), 1e-10);
    const auto g = quad::ball_rule_polar(dim, 7.0, 48);
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g.weights(i) * std::exp(-g.points.col(i).squaredNorm());
    EXPECT_NEAR(s, std::pow(std::numbers::pi, 0.5 * dim), 1e-10);
  }
}

TEST(BallRule, MonteCarloIsUnbiased) {
  const auto r = quad::ball_rule_mc(2, 1.0, 200000, 3);
  double s = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) s += r.weights(i) * r.points.col(i).squaredNorm();
  EXPECT_NEAR(s, std::numbers::pi / 2.0, 0.01);
}
