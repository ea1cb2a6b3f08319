#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kplane/error.hpp"
#include "kplane/transforms.hpp"
#include "oracles.hpp"

using namespace kplane;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

Subspace line_through_axis(double angle) {
  Vec d(2);
  d << std::cos(angle), std::sin(angle);
  return Subspace::from_span(d);
}

}  // namespace

TEST(Radon, GaussianThroughOrigin) {
  const SpatialField f = SpatialField::gaussian(2, 1.0);
  EXPECT_NEAR(radon(f, line_through_axis(0.3), Vec::Zero(1), {}), kSqrtPi, 1e-8);
}

TEST(Radon, ShiftedCenterInPlane) {
  const Subspace h = line_through_axis(0.0);
  Vec c(2);
  c << 1.3, 0.0;
  const SpatialField f = SpatialField::gaussian(2, 1.0, 1.0, c);
  EXPECT_NEAR(radon(f, h, Vec::Constant(1, 1.0), {}), kSqrtPi * std::exp(-1.0), 1e-10);
}

TEST(Radon, PlaneMissesBumpSupport) {
  const SpatialField f = SpatialField::bump(3, 1.0);
  const auto q = haar_sample(3, 1, 5, 2);
  for (std::size_t j = 0; j < q.size(); ++j) {
    EXPECT_EQ(radon(f, q.node(j), Vec::Constant(1, 1.0), {}), 0.0);
    EXPECT_EQ(radon(f, q.node(j), Vec::Constant(1, -1.5), {}), 0.0);
  }
}

TEST(Radon, MatchesHermiteOracleOffCenter) {
  const auto q = haar_sample(4, 2, 6, 17);
  Vec c(4);
  c << 0.3, -0.2, 0.5, 0.1;
  const SpatialField f = SpatialField::gaussian(4, 1.5, 1.0, c);
  Vec z(2);
  z << 0.4, -0.7;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Subspace& h = q.node(j);
    const double o = oracle::gaussian_plane_integral(1.5, h.frame_h(), h.embed_perp(z), c);
    EXPECT_NEAR(radon(f, h, z, {}), o, 1e-10 * o);
  }
}

TEST(Radon, NumericAndClosedFormRoutesAgreeForBumps) {
  const SpatialField f = SpatialField::bump(3, 1.2, 2.0) + SpatialField::gaussian(3, 0.8);
  const auto a = radon_numeric(f, 1, {});
  const auto b = radon_function(f, 1);
  const auto q = haar_sample(3, 1, 8, 4);
  for (std::size_t j = 0; j < q.size(); ++j) {
    for (double t : {0.0, 0.5, 1.1}) {
      const Vec z = Vec::Constant(1, t);
      EXPECT_NEAR(a(q.node(j), z), b(q.node(j), z), 1e-9 * std::abs(b(q.node(j), z)));
    }
  }
}

TEST(BumpSection, TwoDimensionalOracle) {
  // int_R b(sqrt(t^2 + d^2) / r) dt
  for (double d : {0.0, 0.4, 0.9}) {
    const auto rule = oracle::gauss_legendre(200, -1.0, 1.0);
    double o = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      o += rule.weights[i] * oracle::bump(std::sqrt(rule.nodes[i] * rule.nodes[i] + d * d));
    }
    EXPECT_NEAR(bump_section_integral(1, 1.0, d), o, 1e-9);
  }
}

TEST(DualRadon, ConstantGivesTotalMass) {
  const auto q = haar_sample(4, 2, 64, 3);
  const auto one = GrassmannFunction::constant(4, 2, 1.0);
  Vec x(4);
  x << 1, -2, 0.5, 3;
  EXPECT_NEAR(dual_radon(one, x, q), grassmann_mass(4, 2), 1e-12);
}

TEST(DualRadon, GaussianAtOrigin) {
  const auto q = haar_sample(3, 1, 50, 1);
  EXPECT_NEAR(dual_radon(GrassmannFunction::gaussian(3, 1, 2.0), Vec::Zero(3), q), 1.0, 1e-12);
}

TEST(DualRadon, BesselOracleInPlane) {
  Vec x(2);
  x << 2.0, 0.0;
  const double expected = oracle::dual_gaussian_2d(1.0, 2.0);
  EXPECT_NEAR(expected, 0.196402, 5e-7);
  EXPECT_NEAR(dual_radon(GrassmannFunction::gaussian(2, 1, 1.0), x, equiangular_lines(720)), expected, 1e-12);
  const auto mc = haar_sample(2, 1, 200000, 5);
  EXPECT_NEAR(dual_radon(GrassmannFunction::gaussian(2, 1, 1.0), x, mc), expected, 3e-3);
}

TEST(DualRadon, ManyMatchesSingle) {
  const auto q = haar_sample(3, 2, 30, 9);
  const auto g = GrassmannFunction::bump(3, 2, 1.5) + GrassmannFunction::gaussian(3, 2, 0.7);
  const Mat pts = Mat::Random(3, 20) * 2.0;
  const auto many = dual_radon_many(g, pts, q);
  for (Eigen::Index i = 0; i < pts.cols(); ++i) EXPECT_NEAR(many[i], dual_radon(g, pts.col(i), q), 1e-14);
}

TEST(DualRadon, SupBound) {
  const auto q = haar_sample(3, 1, 100, 12);
  const auto g = GrassmannFunction::bump(3, 1, 0.5, 2.0);
  const Mat pts = Mat::Random(3, 100);
  for (double v : dual_radon_many(g, pts, q)) EXPECT_LE(std::abs(v), q.total_mass() * 2.0 * (1 + 1e-14));
}

TEST(DualRadon, ClassicalConversion) { EXPECT_DOUBLE_EQ(classical_dual(0.25), 0.5); }

TEST(SliceFourier, GaussianExamples) {
  const auto g = GrassmannFunction::gaussian(2, 1, 1.0);
  const Subspace h = line_through_axis(0.7);
  EXPECT_NEAR(std::abs(slice_fourier(g, h, Vec::Zero(1), {}) - kSqrtPi), 0.0, 1e-10);
  const auto v = slice_fourier(g, h, Vec::Constant(1, 2.0), {});
  EXPECT_NEAR(v.real(), kSqrtPi * std::exp(-1.0), 1e-10);
  EXPECT_NEAR(v.imag(), 0.0, 1e-10);
}

TEST(Pushforward, Examples) {
  const Subspace h = line_through_axis(0.0);
  Mat a(2, 1);
  a << 0.5, 1.5;
  const auto single = pushforward_measure(DiscreteMeasure(a, Vec::Ones(1)), h);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_NEAR(std::abs(single.atoms()(0, 0)), 1.5, 1e-15);

  Mat pair(2, 2);
  pair << 0.5, -0.5, 1.5, -1.5;
  const auto even = pushforward_measure(DiscreteMeasure(pair, Vec::Constant(2, 0.5)), h);
  ASSERT_EQ(even.size(), 2u);
  EXPECT_NEAR(even.atoms()(0, 0), -even.atoms()(0, 1), 1e-15);

  Mat five(2, 5);
  five << 0, 1, 2, 3, 4, 1, 1, 2, 2, 5;
  Vec w(5);
  w << 0.1, 0.2, 0.3, 0.4, 0.5;
  const auto merged = pushforward_measure(DiscreteMeasure(five, w), h);
  EXPECT_EQ(merged.size(), 3u);
  EXPECT_NEAR(merged.weights().sum(), 1.5, 1e-15);
}

TEST(Pairing, DualityWithRandomPairs) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  const auto q = haar_sample(3, 1, 60, 21);
  for (int trial = 0; trial < 10; ++trial) {
    Vec c = Vec::Zero(3);
    c(0) = u(rng) - 1.0;
    const SpatialField phi = SpatialField::gaussian(3, u(rng), 1.0, c);
    const auto psi = GrassmannFunction::gaussian(3, 1, u(rng));
    const double lhs = pairing(radon_function(phi, 1), psi, q, {});
    const double rhs = integrate_ball(
        [&](const Mat& pts, double* out) {
          for (Eigen::Index i = 0; i < pts.cols(); ++i) out[i] = phi(pts.col(i)) * dual_radon(psi, pts.col(i), q);
        },
        3, c, gaussian_tail_radius(0.5), {});
    EXPECT_NEAR(lhs, rhs, 1e-8 * std::abs(lhs)) << trial;
  }
}

TEST(Pairing, ZeroAndPositivity) {
  const auto q = haar_sample(2, 1, 40, 2);
  const auto g = GrassmannFunction::bump(2, 1, 1.0);
  EXPECT_EQ(pairing(g, GrassmannFunction::constant(2, 1, 0.0), q, {}), 0.0);
  EXPECT_GT(pairing(g, GrassmannFunction::gaussian(2, 1, 3.0), q, {}), 0.0);
}

TEST(LpNorm, SeparableExamples) {
  const auto q = haar_sample(2, 1, 100, 6);
  const auto g = GrassmannFunction::gaussian(2, 1, 1.0);
  const auto one = GrassmannFunction::constant(2, 1, 1.0);
  EXPECT_NEAR(grassmann_lp_norm(g, 1.0, one, q, {}), 2.0 / kSqrtPi, 1e-10);
  EXPECT_NEAR(grassmann_lp_norm(g, 2.0, one, q, {}), std::sqrt((2.0 / std::numbers::pi) * std::sqrt(std::numbers::pi / 2.0)),
              1e-10);
  EXPECT_EQ(grassmann_lp_norm(g, 2.0, GrassmannFunction::constant(2, 1, 0.0), q, {}), 0.0);
}

TEST(LpNorm, L1ContractionOfForwardTransform) {
  const auto q = haar_sample(3, 2, 80, 13);
  const SpatialField f = SpatialField::gaussian(3, 0.9, 1.0) - SpatialField::gaussian(3, 2.0, 0.7);
  const double lhs = grassmann_lp_norm(radon_function(f, 2), 1.0, q, {});
  // |f|_1 by radial quadrature
  const double rhs = integrate_ball(
      [&](const Mat& pts, double* out) {
        for (Eigen::Index i = 0; i < pts.cols(); ++i) out[i] = std::abs(f(pts.col(i)));
      },
      3, Vec::Zero(3), 7.0, {});
  EXPECT_LE(lhs, grassmann_mass(3, 2) * rhs * (1 + 1e-9));
}

TEST(PlaneSpec, Validation) {
  PlaneQuadratureSpec s;
  s.budget = 0;
  EXPECT_THROW(s.validate(), ParameterError);
  EXPECT_EQ(parse_scheme("monte-carlo"), PlaneScheme::monte_carlo);
  EXPECT_THROW(parse_scheme("simpson"), ParameterError);
}
