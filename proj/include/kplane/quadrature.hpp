#pragma once

// Gauss-Legendre rules and product rules on spheres, balls and cubes.
// Multi-dimensional rules store points column-wise (dim x count).

#include <cstdint>
#include <vector>

#include "kplane/linalg.hpp"

namespace kplane::quad {

struct Rule1D {
  std::vector<double> nodes;
  std::vector<double> weights;
};

struct PointRule {
  int dim = 0;
  Mat points;  // dim x count
  Vec weights;

  std::size_t size() const { return static_cast<std::size_t>(weights.size()); }
};

/// Gauss-Legendre rule of the given order on [-1, 1]; cached.
const Rule1D& gauss_legendre(int order);

/// Gauss-Legendre rule mapped to [a, b].
Rule1D gauss_legendre(int order, double a, double b);

/// `panels` equal sub-intervals of [a, b], each with an order-`order` rule.
Rule1D composite_gauss_legendre(int panels, int order, double a, double b);

/// Splits a total node budget into panels of moderate order.
Rule1D composite_for_budget(int budget, double a, double b);

/// Integrates fn over [a, b] with a composite rule of `budget` nodes.
template <class F>
double integrate(F&& fn, double a, double b, int budget) {
  const Rule1D r = composite_for_budget(budget, a, b);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * fn(r.nodes[i]);
  return s;
}

/// Deterministic rule on the unit sphere S^{dim-1} in R^dim for dim <= 4.
/// budget controls resolution: equiangular points on circles, Gauss-Legendre
/// in the polar variable.
PointRule sphere_rule(int dim, int budget);

/// Monte Carlo rule on S^{dim-1}: normalized Gaussian vectors with equal weights.
PointRule sphere_rule_mc(int dim, std::size_t count, std::uint64_t seed);

/// Polar product rule on the ball of the given radius centered at 0.
/// For dim = 1 this is a composite Gauss-Legendre rule on [-radius, radius].
PointRule ball_rule_polar(int dim, double radius, int budget);

/// Tensor Gauss-Legendre rule on the cube [-radius, radius]^dim.
PointRule cube_rule(int dim, double radius, int per_axis);

/// Uniform Monte Carlo rule on the ball.
PointRule ball_rule_mc(int dim, double radius, std::size_t count, std::uint64_t seed);

/// Surface area of the unit sphere S^{dim-1} in R^dim (2 for dim = 1).
double sphere_area(int dim);

/// Volume of the unit ball in R^dim.
double unit_ball_volume(int dim);

}  // namespace kplane::quad
