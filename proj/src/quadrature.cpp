#include "kplane/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>

#include "kplane/error.hpp"

namespace kplane::quad {

namespace {

// P_order(x) and its derivative by the three-term recurrence.
void legendre(int order, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  for (int j = 2; j <= order; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = order * (x * p1 - p0) / (x * x - 1.0);
}

Rule1D compute_gauss_legendre(int order) {
  Rule1D r;
  r.nodes.resize(order);
  r.weights.resize(order);
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double p = 0.0, dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      legendre(order, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    legendre(order, x, &p, &dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.weights[i] = w;
    r.nodes[order - 1 - i] = x;
    r.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) r.nodes[order / 2] = 0.0;
  return r;
}

void require_budget(int budget) {
  if (budget < 1) throw ParameterError("quadrature budget must be positive");
}

}  // namespace

const Rule1D& gauss_legendre(int order) {
  if (order < 1) throw ParameterError("Gauss-Legendre order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Rule1D>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) {
    if (order == 1) {
      slot = std::make_unique<Rule1D>(Rule1D{{0.0}, {2.0}});
    } else {
      slot = std::make_unique<Rule1D>(compute_gauss_legendre(order));
    }
  }
  return *slot;
}

Rule1D gauss_legendre(int order, double a, double b) {
  const Rule1D& ref = gauss_legendre(order);
  Rule1D r;
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    r.nodes.push_back(mid + half * ref.nodes[i]);
    r.weights.push_back(half * ref.weights[i]);
  }
  return r;
}

Rule1D composite_gauss_legendre(int panels, int order, double a, double b) {
  if (panels < 1) throw ParameterError("panel count must be positive");
  const Rule1D& ref = gauss_legendre(order);
  Rule1D r;
  r.nodes.reserve(static_cast<std::size_t>(panels) * order);
  r.weights.reserve(r.nodes.capacity());
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    for (int i = 0; i < order; ++i) {
      r.nodes.push_back(lo + 0.5 * h * (ref.nodes[i] + 1.0));
      r.weights.push_back(0.5 * h * ref.weights[i]);
    }
  }
  return r;
}

Rule1D composite_for_budget(int budget, double a, double b) {
  require_budget(budget);
  constexpr int kMaxOrder = 24;
  const int panels = (budget + kMaxOrder - 1) / kMaxOrder;
  const int order = (budget + panels - 1) / panels;
  return composite_gauss_legendre(panels, order, a, b);
}

double sphere_area(int dim) {
  if (dim < 1) throw ParameterError("sphere dimension must be positive");
  return 2.0 * std::pow(std::numbers::pi, 0.5 * dim) / std::tgamma(0.5 * dim);
}

double unit_ball_volume(int dim) { return sphere_area(dim) / dim; }

PointRule sphere_rule(int dim, int budget) {
  require_budget(budget);
  PointRule r;
  r.dim = dim;
  switch (dim) {
    case 1:
      r.points = Mat{{1.0, -1.0}};
      r.weights = Vec::Ones(2);
      return r;
    case 2: {
      const int m = std::max(budget, 3);
      r.points.resize(2, m);
      r.weights = Vec::Constant(m, 2.0 * std::numbers::pi / m);
      for (int j = 0; j < m; ++j) {
        const double t = 2.0 * std::numbers::pi * j / m;
        r.points(0, j) = std::cos(t);
        r.points(1, j) = std::sin(t);
      }
      return r;
    }
    case 3: {
      const Rule1D& g = gauss_legendre(budget);
      const PointRule circle = sphere_rule(2, 2 * budget);
      const Eigen::Index m = static_cast<Eigen::Index>(budget) * circle.size();
      r.points.resize(3, m);
      r.weights.resize(m);
      Eigen::Index c = 0;
      for (int i = 0; i < budget; ++i) {
        const double t = g.nodes[i], s = std::sqrt(1.0 - t * t);
        for (std::size_t j = 0; j < circle.size(); ++j, ++c) {
          r.points(0, c) = s * circle.points(0, j);
          r.points(1, c) = s * circle.points(1, j);
          r.points(2, c) = t;
          r.weights(c) = g.weights[i] * circle.weights(j);
        }
      }
      return r;
    }
    case 4: {
      // x = (cos b u, sin b v) with u, v on circles, density sin b cos b
      const Rule1D g = gauss_legendre(budget, 0.0, 0.5 * std::numbers::pi);
      const PointRule circle = sphere_rule(2, 2 * budget);
      const Eigen::Index cs = circle.weights.size();
      const Eigen::Index m = static_cast<Eigen::Index>(budget) * cs * cs;
      r.points.resize(4, m);
      r.weights.resize(m);
      Eigen::Index c = 0;
      for (int i = 0; i < budget; ++i) {
        const double cb = std::cos(g.nodes[i]), sb = std::sin(g.nodes[i]);
        for (Eigen::Index a = 0; a < cs; ++a) {
          for (Eigen::Index b = 0; b < cs; ++b, ++c) {
            r.points(0, c) = cb * circle.points(0, a);
            r.points(1, c) = cb * circle.points(1, a);
            r.points(2, c) = sb * circle.points(0, b);
            r.points(3, c) = sb * circle.points(1, b);
            r.weights(c) = g.weights[i] * sb * cb * circle.weights(a) * circle.weights(b);
          }
        }
      }
      return r;
    }
    default:
      throw ParameterError("deterministic sphere rules are available for dim <= 4 only");
  }
}

PointRule sphere_rule_mc(int dim, std::size_t count, std::uint64_t seed) {
  if (count == 0) throw ParameterError("quadrature budget must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  PointRule r;
  r.dim = dim;
  r.points.resize(dim, static_cast<Eigen::Index>(count));
  r.weights = Vec::Constant(static_cast<Eigen::Index>(count), sphere_area(dim) / count);
  for (Eigen::Index j = 0; j < r.points.cols(); ++j) {
    double norm = 0.0;
    do {
      for (int d = 0; d < dim; ++d) r.points(d, j) = normal(rng);
      norm = r.points.col(j).norm();
    } while (norm == 0.0);
    r.points.col(j) /= norm;
  }
  return r;
}

PointRule ball_rule_polar(int dim, double radius, int budget) {
  require_budget(budget);
  PointRule r;
  r.dim = dim;
  if (dim == 1) {
    const Rule1D g = composite_for_budget(budget, -radius, radius);
    r.points.resize(1, static_cast<Eigen::Index>(g.nodes.size()));
    r.weights.resize(static_cast<Eigen::Index>(g.nodes.size()));
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      r.points(0, i) = g.nodes[i];
      r.weights(i) = g.weights[i];
    }
    return r;
  }
  const Rule1D radial = composite_for_budget(budget, 0.0, radius);
  const PointRule sphere = sphere_rule(dim, dim == 2 ? 2 * budget : budget);
  const Eigen::Index ns = sphere.weights.size();
  const Eigen::Index m = static_cast<Eigen::Index>(radial.nodes.size()) * ns;
  r.points.resize(dim, m);
  r.weights.resize(m);
  Eigen::Index c = 0;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double rho = radial.nodes[i];
    const double wr = radial.weights[i] * std::pow(rho, dim - 1);
    for (Eigen::Index j = 0; j < ns; ++j, ++c) {
      r.points.col(c) = rho * sphere.points.col(j);
      r.weights(c) = wr * sphere.weights(j);
    }
  }
  return r;
}

PointRule cube_rule(int dim, double radius, int per_axis) {
  require_budget(per_axis);
  if (dim < 1) throw ParameterError("dimension must be positive");
  const Rule1D g = composite_for_budget(per_axis, -radius, radius);
  const Eigen::Index q = static_cast<Eigen::Index>(g.nodes.size());
  Eigen::Index m = 1;
  for (int d = 0; d < dim; ++d) m *= q;
  PointRule r;
  r.dim = dim;
  r.points.resize(dim, m);
  r.weights.resize(m);
  for (Eigen::Index c = 0; c < m; ++c) {
    Eigen::Index rest = c;
    double w = 1.0;
    for (int d = 0; d < dim; ++d) {
      const Eigen::Index i = rest % q;
      rest /= q;
      r.points(d, c) = g.nodes[i];
      w *= g.weights[i];
    }
    r.weights(c) = w;
  }
  return r;
}

PointRule ball_rule_mc(int dim, double radius, std::size_t count, std::uint64_t seed) {
  PointRule r = sphere_rule_mc(dim, count, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (Eigen::Index j = 0; j < r.points.cols(); ++j) {
    r.points.col(j) *= radius * std::pow(uniform(rng), 1.0 / dim);
  }
  r.weights.setConstant(unit_ball_volume(dim) * std::pow(radius, dim) / count);
  return r;
}

}  // namespace kplane::quad
