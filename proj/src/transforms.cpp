#include "kplane/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <tuple>

#include "kplane/error.hpp"
#include "kplane/kernels/kernels.hpp"
#include "kplane/parallel.hpp"

namespace kplane {

namespace {

constexpr double kMergeTol = 1e-10;
constexpr int kSectionOrder = 64;

const quad::PointRule& unit_rule(int dim, const PlaneQuadratureSpec& spec) {
  using Key = std::tuple<int, int, int, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<quad::PointRule>> cache;
  const Key key{static_cast<int>(spec.scheme), dim, spec.budget,
                spec.scheme == PlaneScheme::monte_carlo ? spec.seed : 0};
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) {
    switch (spec.scheme) {
      case PlaneScheme::tensor_gauss:
        slot = std::make_unique<quad::PointRule>(quad::cube_rule(dim, 1.0, spec.budget));
        break;
      case PlaneScheme::polar_gauss:
        slot = std::make_unique<quad::PointRule>(quad::ball_rule_polar(dim, 1.0, spec.budget));
        break;
      case PlaneScheme::monte_carlo:
        slot = std::make_unique<quad::PointRule>(
            quad::ball_rule_mc(dim, 1.0, static_cast<std::size_t>(spec.budget), spec.seed));
        break;
    }
  }
  return *slot;
}

void require_bounded(const Window& w) {
  if (!w.bounded()) {
    throw UnsupportedInput("function has no bounded integration window over H-perp");
  }
}

// Integral of fn(z) over the window, fn evaluated point by point.
template <class F>
double window_integral(const Window& w, int k, const PlaneQuadratureSpec& spec, F&& fn) {
  require_bounded(w);
  if (w.radius <= 0.0) return 0.0;
  const quad::PointRule& rule = unit_rule(k, spec);
  const double scale = std::pow(w.radius, k);
  std::vector<double> terms(rule.size());
  Vec z(k);
  for (std::size_t p = 0; p < rule.size(); ++p) {
    z = w.center + w.radius * rule.points.col(static_cast<Eigen::Index>(p));
    terms[p] = rule.weights(static_cast<Eigen::Index>(p)) * fn(z);
  }
  return scale * parallel::pairwise_sum(terms);
}

}  // namespace

const char* scheme_name(PlaneScheme s) {
  switch (s) {
    case PlaneScheme::tensor_gauss:
      return "tensor-gauss";
    case PlaneScheme::polar_gauss:
      return "polar-gauss";
    case PlaneScheme::monte_carlo:
      return "monte-carlo";
  }
  return "polar-gauss";
}

PlaneScheme parse_scheme(const std::string& name) {
  if (name == "tensor-gauss") return PlaneScheme::tensor_gauss;
  if (name == "polar-gauss") return PlaneScheme::polar_gauss;
  if (name == "monte-carlo") return PlaneScheme::monte_carlo;
  throw ParameterError("unknown plane quadrature scheme '" + name + "'");
}

void PlaneQuadratureSpec::validate() const {
  if (budget < 2) throw ParameterError("plane quadrature budget must be at least 2");
  if (!(truncation_radius > 0.0)) throw ParameterError("truncation radius must be positive");
}

quad::PointRule plane_rule(int dim, double radius, const PlaneQuadratureSpec& spec) {
  spec.validate();
  quad::PointRule r = unit_rule(dim, spec);
  r.points *= radius;
  r.weights *= std::pow(radius, dim);
  return r;
}

double radon(const SpatialField& f, const Subspace& h, const Vec& z,
             const PlaneQuadratureSpec& spec) {
  spec.validate();
  const int n = h.n(), m = h.dim();
  if (f.dim() != n) throw ParameterError("field and plane live in different dimensions");
  if (z.size() != h.k()) throw ParameterError("offset dimension must equal k");
  const Vec zp = h.embed_perp(z);
  const quad::PointRule& rule = unit_rule(m, spec);
  const std::size_t count = rule.size();
  std::vector<double> coords(static_cast<std::size_t>(n) * count), vals(count);
  double total = 0.0;

  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const FieldTerm& t = f.terms()[i];
    Vec y0 = Vec::Zero(m);
    double reach = 0.0;
    switch (t.kind) {
      case FieldTerm::Kind::gaussian:
        y0 = h.project_plane(t.center);
        reach = gaussian_tail_radius(t.a);
        break;
      case FieldTerm::Kind::bump: {
        const double d2 = (z - h.project_complement(t.center)).squaredNorm();
        if (d2 >= t.radius * t.radius) continue;
        y0 = h.project_plane(t.center);
        reach = std::sqrt(t.radius * t.radius - d2);
        break;
      }
      case FieldTerm::Kind::custom:
        if (t.decay == Decay::power) {
          throw UnsupportedInput("plane integrals of power-decay fields may diverge");
        }
        if (t.decay == Decay::compact) {
          const double r2 = t.radius * t.radius - z.squaredNorm();
          if (r2 <= 0.0) continue;
          reach = std::sqrt(r2);
        } else {
          reach = spec.truncation_radius;
        }
        break;
    }
    // points x = F_H (y0 + reach u) + z_perp, dimension-major
    const Vec base = h.embed_plane(y0) + zp;
    const Mat dirs = reach * (h.frame_h() * rule.points);
    for (int d = 0; d < n; ++d) {
      double* row = coords.data() + static_cast<std::size_t>(d) * count;
      for (std::size_t p = 0; p < count; ++p) row[p] = base(d) + dirs(d, static_cast<Eigen::Index>(p));
    }
    std::fill(vals.begin(), vals.end(), 0.0);
    f.add_term_batch(i, coords.data(), count, count, vals.data());
    total += std::pow(reach, m) * kernels::dot(rule.weights.data(), vals.data(), count);
  }
  return total;
}

Window radon_window(const SpatialField& f, const Subspace& h) {
  Window w{Vec::Zero(h.k()), 0.0, Decay::compact};
  bool first = true;
  for (const auto& t : f.terms()) {
    Window tw;
    switch (t.kind) {
      case FieldTerm::Kind::gaussian:
        tw = Window{h.project_complement(t.center), gaussian_tail_radius(t.a), Decay::gaussian};
        break;
      case FieldTerm::Kind::bump:
        tw = Window{h.project_complement(t.center), t.radius, Decay::compact};
        break;
      case FieldTerm::Kind::custom:
        tw = t.decay == Decay::power ? Window{Vec::Zero(h.k())}
                                     : Window{Vec::Zero(h.k()), t.radius, t.decay};
        break;
    }
    w = first ? tw : enclose(w, tw);
    first = false;
  }
  return w;
}

namespace {

bool centered_standard_terms(const SpatialField& f) {
  for (const auto& t : f.terms()) {
    if (t.kind == FieldTerm::Kind::custom || !t.center.isZero(0.0)) return false;
  }
  return true;
}

}  // namespace

GrassmannFunction radon_numeric(const SpatialField& f, int k, const PlaneQuadratureSpec& spec) {
  spec.validate();
  const int n = f.dim();
  validate_dims(n, k);
  const GrassmannFunction whole(
      n, k, [f, spec](const Subspace& h, const Vec& z) { return radon(f, h, z, spec); },
      [f](const Subspace& h) { return radon_window(f, h); }, centered_standard_terms(f),
      f.support_radius());
  if (f.terms().size() < 2) return whole;
  std::vector<GrassmannFunction> parts;
  for (std::size_t i = 0; i < f.terms().size(); ++i) parts.push_back(radon_numeric(f.term(i), k, spec));
  return whole.with_parts(std::move(parts));
}

double bump_section_integral(int m, double radius, double d) {
  if (m < 1) throw ParameterError("plane dimension must be positive");
  const double r2 = radius * radius;
  if (d * d >= r2) return 0.0;
  const double len = std::sqrt(r2 - d * d);
  const quad::Rule1D& g = quad::gauss_legendre(kSectionOrder);
  std::array<double, kSectionOrder> arg{}, val{};
  std::array<double, kSectionOrder> rho{};
  for (int i = 0; i < kSectionOrder; ++i) {
    rho[i] = 0.5 * len * (g.nodes[i] + 1.0);
    const double s2 = (rho[i] * rho[i] + d * d) / r2;
    arg[i] = 1.0 - 1.0 / (1.0 - s2);
  }
  kernels::exp(arg.data(), val.data(), kSectionOrder);
  double s = 0.0;
  for (int i = 0; i < kSectionOrder; ++i) s += g.weights[i] * val[i] * std::pow(rho[i], m - 1);
  return quad::sphere_area(m) * 0.5 * len * s;
}

GrassmannFunction radon_function(const SpatialField& f, int k) {
  const int n = f.dim();
  validate_dims(n, k);
  const int m = n - k;
  for (const auto& t : f.terms()) {
    if (t.kind == FieldTerm::Kind::custom) {
      throw UnsupportedInput("no closed-form Radon transform for custom field terms");
    }
  }
  auto eval = [f, m](const Subspace& h, const Vec& z) {
    double s = 0.0;
    for (const auto& t : f.terms()) {
      const double d2 = (z - h.project_complement(t.center)).squaredNorm();
      if (t.kind == FieldTerm::Kind::gaussian) {
        s += t.weight * std::pow(std::numbers::pi / t.a, 0.5 * m) * std::exp(-t.a * d2);
      } else {
        s += t.weight * std::pow(t.radius, m) * bump_section_integral(m, 1.0, std::sqrt(d2) / t.radius);
      }
    }
    return s;
  };
  auto batch = [f, m, k](const GrassmannQuadrature& q, const double* coords, double* out) {
    const std::size_t count = q.size();
    std::fill(out, out + count, 0.0);
    std::vector<double> pc;
    std::vector<double> shifted(static_cast<std::size_t>(k) * count);
    const std::vector<double> origin(k, 0.0);
    for (const auto& t : f.terms()) {
      q.project_all(t.center, pc);
      for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] = coords[i] - pc[i];
      if (t.kind == FieldTerm::Kind::gaussian) {
        kernels::add_gaussian(shifted.data(), count, count, k, origin.data(), t.a,
                              t.weight * std::pow(std::numbers::pi / t.a, 0.5 * m), out);
      } else {
        const double scale = t.weight * std::pow(t.radius, m);
        for (std::size_t j = 0; j < count; ++j) {
          double d2 = 0.0;
          for (int r = 0; r < k; ++r) d2 += shifted[r * count + j] * shifted[r * count + j];
          const double d = std::sqrt(d2) / t.radius;
          if (d < 1.0) out[j] += scale * bump_section_integral(m, 1.0, d);
        }
      }
    }
  };
  const GrassmannFunction whole(
      n, k, eval, [f](const Subspace& h) { return radon_window(f, h); }, centered_standard_terms(f),
      f.support_radius(), batch);
  if (f.terms().size() < 2) return whole;
  std::vector<GrassmannFunction> parts;
  for (std::size_t i = 0; i < f.terms().size(); ++i) parts.push_back(radon_function(f.term(i), k));
  return whole.with_parts(std::move(parts));
}

double dual_radon(const GrassmannFunction& g, const Vec& x, const GrassmannQuadrature& q) {
  if (g.n() != q.n() || g.k() != q.k()) {
    throw ParameterError("function and quadrature differ in (n, k)");
  }
  thread_local std::vector<double> coords, vals;
  q.project_all(x, coords);
  vals.resize(q.size());
  g.evaluate_nodes(q, coords.data(), vals.data());
  for (std::size_t j = 0; j < q.size(); ++j) vals[j] *= q.weight(j);
  return parallel::pairwise_sum(vals);
}

std::vector<double> dual_radon_many(const GrassmannFunction& g, const Mat& points,
                                    const GrassmannQuadrature& q) {
  return parallel::map(static_cast<std::size_t>(points.cols()), [&](std::size_t i) {
    return dual_radon(g, points.col(static_cast<Eigen::Index>(i)), q);
  });
}

std::vector<std::complex<double>> slice_fourier_many(const GrassmannFunction& g, const Subspace& h,
                                                     const std::vector<Vec>& omegas,
                                                     const PlaneQuadratureSpec& spec) {
  spec.validate();
  const int k = h.k();
  if (g.n() != h.n() || g.k() != k) throw ParameterError("function and plane differ in (n, k)");
  for (const Vec& omega : omegas) {
    if (omega.size() != k) throw ParameterError("frequency dimension must equal k");
  }
  std::vector<std::complex<double>> out(omegas.size(), 0.0);
  const quad::PointRule& rule = unit_rule(k, spec);
  const std::size_t count = rule.size();
  std::vector<double> weighted(count), phase(count);
  for (const GrassmannFunction& part : g.parts()) {
    const Window w = part.window(h);
    require_bounded(w);
    if (w.radius <= 0.0) continue;
    Mat pts = w.radius * rule.points;
    pts.colwise() += w.center;
    parallel::for_each_index(count, [&](std::size_t p) {
      const auto i = static_cast<Eigen::Index>(p);
      weighted[p] = rule.weights(i) * part(h, pts.col(i));
    });
    const double scale = std::pow(w.radius, k);
    for (std::size_t o = 0; o < omegas.size(); ++o) {
      const Vec phases = pts.transpose() * omegas[o];
      for (std::size_t p = 0; p < count; ++p) phase[p] = phases(static_cast<Eigen::Index>(p));
      double c = 0.0, s = 0.0;
      kernels::phase_sums(phase.data(), weighted.data(), count, &c, &s);
      out[o] += std::complex<double>(scale * c, -scale * s);
    }
  }
  return out;
}

std::complex<double> slice_fourier(const GrassmannFunction& g, const Subspace& h, const Vec& omega,
                                   const PlaneQuadratureSpec& spec) {
  return slice_fourier_many(g, h, {omega}, spec).front();
}

DiscreteMeasure pushforward_measure(const DiscreteMeasure& mu, const Subspace& h) {
  if (mu.dim() != h.n()) throw ParameterError("measure and plane live in different dimensions");
  const Mat projected = h.frame_perp().transpose() * mu.atoms();
  std::vector<Vec> atoms;
  std::vector<double> weights;
  for (Eigen::Index j = 0; j < projected.cols(); ++j) {
    const Vec a = projected.col(j);
    bool merged = false;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if ((atoms[i] - a).norm() <= kMergeTol) {
        weights[i] += mu.weights()(j);
        merged = true;
        break;
      }
    }
    if (!merged) {
      atoms.push_back(a);
      weights.push_back(mu.weights()(j));
    }
  }
  Mat out(h.k(), static_cast<Eigen::Index>(atoms.size()));
  Vec w(static_cast<Eigen::Index>(atoms.size()));
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    out.col(static_cast<Eigen::Index>(i)) = atoms[i];
    w(static_cast<Eigen::Index>(i)) = weights[i];
  }
  return DiscreteMeasure(out, w);
}

double integrate_perp(const GrassmannFunction& g, const Subspace& h,
                      const PlaneQuadratureSpec& spec) {
  spec.validate();
  if (g.n() != h.n() || g.k() != h.k()) throw ParameterError("function and plane differ in (n, k)");
  double total = 0.0;
  for (const GrassmannFunction& part : g.parts()) {
    total += window_integral(part.window(h), h.k(), spec, [&](const Vec& z) { return part(h, z); });
  }
  return total;
}

std::vector<double> perp_moments(const GrassmannFunction& g, const Subspace& h,
                                 const PlaneQuadratureSpec& spec,
                                 const std::vector<std::function<double(const Vec&)>>& weights) {
  spec.validate();
  if (g.n() != h.n() || g.k() != h.k()) throw ParameterError("function and plane differ in (n, k)");
  const int k = h.k();
  std::vector<double> out(weights.size(), 0.0);
  const quad::PointRule& rule = unit_rule(k, spec);
  std::vector<std::vector<double>> terms(weights.size(), std::vector<double>(rule.size()));
  Vec z(k);
  for (const GrassmannFunction& part : g.parts()) {
    const Window w = part.window(h);
    require_bounded(w);
    if (w.radius <= 0.0) continue;
    const double scale = std::pow(w.radius, k);
    for (std::size_t p = 0; p < rule.size(); ++p) {
      z = w.center + w.radius * rule.points.col(static_cast<Eigen::Index>(p));
      const double v = rule.weights(static_cast<Eigen::Index>(p)) * part(h, z);
      for (std::size_t i = 0; i < weights.size(); ++i) terms[i][p] = v * weights[i](z);
    }
    for (std::size_t i = 0; i < weights.size(); ++i) out[i] += scale * parallel::pairwise_sum(terms[i]);
  }
  return out;
}

double pairing(const GrassmannFunction& g, const GrassmannFunction& psi,
               const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec) {
  spec.validate();
  if (g.n() != q.n() || g.k() != q.k() || psi.n() != q.n() || psi.k() != q.k()) {
    throw ParameterError("functions and quadrature differ in (n, k)");
  }
  const GrassmannFunction product = g * psi;
  return parallel::ordered_reduce(q.size(), [&](std::size_t j) {
    return q.weight(j) * integrate_perp(product, q.node(j), spec);
  });
}

double grassmann_lp_norm(const GrassmannFunction& g, double p, const GrassmannFunction& w,
                         const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec) {
  if (!(p >= 1.0)) throw ParameterError("L^p norms need p >= 1");
  const GrassmannFunction integrand = g.pow(p) * w;
  const double total = parallel::ordered_reduce(q.size(), [&](std::size_t j) {
    return q.weight(j) * integrate_perp(integrand, q.node(j), spec);
  });
  return std::pow(std::max(total, 0.0), 1.0 / p);
}

double grassmann_lp_norm(const GrassmannFunction& g, double p, const GrassmannQuadrature& q,
                         const PlaneQuadratureSpec& spec) {
  if (!(p >= 1.0)) throw ParameterError("L^p norms need p >= 1");
  const GrassmannFunction integrand = g.pow(p);
  const double total = parallel::ordered_reduce(q.size(), [&](std::size_t j) {
    return q.weight(j) * integrate_perp(integrand, q.node(j), spec);
  });
  return std::pow(std::max(total, 0.0), 1.0 / p);
}

double integrate_ball(const std::function<void(const Mat& points, double* out)>& f, int n,
                      const Vec& center, double radius, const PlaneQuadratureSpec& spec) {
  spec.validate();
  if (center.size() != n) throw ParameterError("center dimension does not match");
  const quad::PointRule& rule = unit_rule(n, spec);
  constexpr std::size_t kChunk = 2048;
  const std::size_t count = rule.size();
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  const double scale = std::pow(radius, n);
  const double total = parallel::ordered_reduce(chunks, [&](std::size_t c) {
    const std::size_t lo = c * kChunk, len = std::min(kChunk, count - lo);
    Mat pts = radius * rule.points.middleCols(static_cast<Eigen::Index>(lo),
                                              static_cast<Eigen::Index>(len));
    pts.colwise() += center;
    std::vector<double> vals(len);
    f(pts, vals.data());
    double s = 0.0;
    for (std::size_t i = 0; i < len; ++i) s += rule.weights(static_cast<Eigen::Index>(lo + i)) * vals[i];
    return s;
  });
  return scale * total;
}

GrassmannQuadrature sphere_grassmann_rule(int n, int k, int budget) {
  validate_dims(n, k);
  if (k != 1 && k != n - 1) {
    throw ParameterError("sphere-indexed Grassmann rules need k = 1 or k = n - 1");
  }
  const quad::PointRule sphere = quad::sphere_rule(n, budget);
  const double scale = grassmann_mass(n, k) / quad::sphere_area(n);
  std::vector<Subspace> nodes;
  std::vector<double> weights;
  nodes.reserve(sphere.size());
  for (std::size_t j = 0; j < sphere.size(); ++j) {
    const Mat v = sphere.points.col(static_cast<Eigen::Index>(j));
    nodes.push_back(k == 1 ? Subspace::from_normals(v) : Subspace::from_span(v));
    weights.push_back(scale * sphere.weights(static_cast<Eigen::Index>(j)));
  }
  return GrassmannQuadrature(n, k, std::move(nodes), std::move(weights));
}

}  // namespace kplane
