#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kplane/error.hpp"
#include "kplane/geometry.hpp"
#include "kplane/transforms.hpp"
#include "oracles.hpp"

using namespace kplane;

TEST(GrassmannMass, MatchesSphereRatio) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const double expected = oracle::sphere_area(k) * oracle::sphere_area(n - k) / oracle::sphere_area(n);
      EXPECT_NEAR(grassmann_mass(n, k), expected, 1e-14 * expected) << n << "," << k;
    }
  }
}

TEST(HaarSample, TotalMassInPlane) {
  const auto q = haar_sample(2, 1, 1000, 42);
  EXPECT_EQ(q.size(), 1000u);
  EXPECT_NEAR(q.total_mass(), 2.0 / std::numbers::pi, 1e-12);
}

TEST(HaarSample, SingleNodeCarriesUnitMass) {
  const auto q = haar_sample(3, 1, 1, 0);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_NEAR(q.weight(0), 1.0, 1e-12);
}

TEST(HaarSample, ProjectionTraceAverage) {
  const auto q = haar_sample(3, 1, 100000, 7);
  double mean = 0.0;
  const Vec e1 = Vec::Unit(3, 0);
  for (std::size_t j = 0; j < q.size(); ++j) mean += q.node(j).project_complement(e1).squaredNorm();
  mean /= static_cast<double>(q.size());
  EXPECT_NEAR(mean, 1.0 / 3.0, 0.01);
}

TEST(HaarSample, FramesAreOrthonormal) {
  for (auto [n, k] : {std::pair{2, 1}, {3, 1}, {3, 2}, {4, 2}, {5, 3}}) {
    const auto q = haar_sample(n, k, 50, 3);
    for (std::size_t j = 0; j < q.size(); ++j) {
      Mat full(n, n);
      full << q.node(j).frame_h(), q.node(j).frame_perp();
      EXPECT_LT((full.transpose() * full - Mat::Identity(n, n)).norm(), 1e-12);
    }
  }
}

TEST(HaarSample, Errors) {
  EXPECT_THROW(haar_sample(2, 2, 10, 0), ParameterError);
  EXPECT_THROW(haar_sample(3, 0, 10, 0), ParameterError);
  EXPECT_THROW(haar_sample(3, 1, 0, 0), ParameterError);
}

TEST(HaarSample, DeterministicForSeed) {
  const auto a = haar_sample(4, 2, 20, 99), b = haar_sample(4, 2, 20, 99);
  for (std::size_t j = 0; j < a.size(); ++j) EXPECT_EQ(a.node(j).frame_perp(), b.node(j).frame_perp());
}

TEST(Subspace, ProjectComplementExamples) {
  const Subspace h = Subspace::from_span(Vec::Unit(2, 0));
  Vec x(2);
  x << 3, 4;
  const Vec c = h.project_complement(x);
  ASSERT_EQ(c.size(), 1);
  EXPECT_NEAR(std::abs(c(0)), 4.0, 1e-14);

  const Subspace h3 = Subspace::from_span(Vec::Unit(3, 2));
  Vec y(3);
  y << 1, 2, 3;
  EXPECT_NEAR(h3.project_complement(y).norm(), std::sqrt(5.0), 1e-14);
}

TEST(Subspace, PointsOfThePlaneProjectToZero) {
  const auto q = haar_sample(4, 2, 10, 5);
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Vec x = q.node(j).embed_plane(Vec::Constant(2, 0.7));
    EXPECT_LT(q.node(j).project_complement(x).norm(), 1e-14);
  }
}

TEST(Subspace, DimensionMismatch) {
  const Subspace h = Subspace::from_span(Vec::Unit(3, 0));
  EXPECT_THROW(h.project_complement(Vec::Zero(2)), ParameterError);
}

TEST(Bispherical, SurfaceAreas) {
  auto one = [](const Vec&) { return 1.0; };
  EXPECT_NEAR(bispherical_integrate(one, 3, 1), 4.0 * std::numbers::pi, 1e-10);
  EXPECT_NEAR(bispherical_integrate(one, 4, 2), 2.0 * std::numbers::pi * std::numbers::pi, 1e-10);
}

TEST(Bispherical, SecondMoment) {
  auto f = [](const Vec& xi) { return xi(2) * xi(2); };
  EXPECT_NEAR(bispherical_integrate(f, 3, 1), 4.0 * std::numbers::pi / 3.0, 1e-10);
}

TEST(Bispherical, ZeroBudgetRejected) {
  BisphericalSpec spec;
  spec.angle_nodes = 0;
  EXPECT_THROW(bispherical_integrate([](const Vec&) { return 1.0; }, 3, 1, spec), ParameterError);
}

TEST(DeterministicRules, MassAndSymmetry) {
  const auto lines = equiangular_lines(360);
  EXPECT_NEAR(lines.total_mass(), 2.0 / std::numbers::pi, 1e-13);
  for (auto [n, k] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 3}}) {
    const auto q = sphere_grassmann_rule(n, k, 24);
    EXPECT_NEAR(q.total_mass(), grassmann_mass(n, k), 1e-12);
    double mean = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) {
      mean += q.weight(j) * q.node(j).project_complement(Vec::Unit(n, 0)).squaredNorm();
    }
    EXPECT_NEAR(mean / q.total_mass(), static_cast<double>(k) / n, 1e-10);
  }
}
