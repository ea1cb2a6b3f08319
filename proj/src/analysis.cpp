#include "kplane/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "kplane/error.hpp"
#include "kplane/parallel.hpp"
#include "kplane/quadrature.hpp"

namespace kplane {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cap_integral(int n, int k, double ratio) {
  const double top = std::asin(std::min(ratio, 1.0));
  return quad::integrate(
      [&](double w) { return std::pow(std::sin(w), k - 1) * std::pow(std::cos(w), n - k - 1); },
      0.0, top, 96);
}

// Smallest exact(s)/s^k over a geometric grid of s in (0, 1] and the s -> 0 limit.
double empirical_lower_constant(int n, int k) {
  const double mass = grassmann_mass(n, k);
  double best = mass / k;
  for (int j = 0; j <= 80; ++j) {
    const double s = std::pow(2.0, -0.25 * j);
    best = std::min(best, mass * cap_integral(n, k, s) / std::pow(s, k));
  }
  return best;
}

// Exponent tuples of total degree j in n variables, in lexicographic order.
void exponents(int n, int j, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(j);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = j; e >= 0; --e) {
    cur.push_back(e);
    exponents(n, j - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> monomials(int n, int j) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  exponents(n, j, cur, out);
  return out;
}

double monomial(const Vec& x, const std::vector<int>& e) {
  double v = 1.0;
  for (std::size_t i = 0; i < e.size(); ++i) v *= std::pow(x(static_cast<Eigen::Index>(i)), e[i]);
  return v;
}

// e_r and (e_r + e_s)/sqrt(2) in R^k.
std::vector<Vec> moment_directions(int k) {
  std::vector<Vec> out;
  for (int r = 0; r < k; ++r) out.push_back(Vec::Unit(k, r));
  for (int r = 0; r < k; ++r) {
    for (int s = r + 1; s < k; ++s) out.push_back((Vec::Unit(k, r) + Vec::Unit(k, s)) / std::sqrt(2.0));
  }
  return out;
}

std::string format_point(const Vec& x) {
  std::ostringstream os;
  os.precision(6);
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i);
  os << ")";
  return os.str();
}

bool has_custom(const SpatialField& f) {
  return std::any_of(f.terms().begin(), f.terms().end(),
                     [](const FieldTerm& t) { return t.kind == FieldTerm::Kind::custom; });
}

// Throws NotAdmissible with the first negative point found.
void require_nonnegative(const SpatialField& phi) {
  const bool signed_terms = std::any_of(phi.terms().begin(), phi.terms().end(), [](const FieldTerm& t) {
    return t.weight < 0.0 || t.kind == FieldTerm::Kind::custom;
  });
  if (!signed_terms) return;
  const int n = phi.dim();
  std::vector<Vec> candidates{Vec::Zero(n)};
  for (const auto& t : phi.terms()) candidates.push_back(t.center);
  const double radius = std::isfinite(phi.support_radius()) ? phi.support_radius()
                                                            : phi.truncation_radius();
  const Mat dirs = random_unit_vectors(n, 4096, 0x5eedULL);
  for (Eigen::Index j = 0; j < dirs.cols(); ++j) {
    const double t = radius * std::pow((static_cast<double>(j) + 0.5) / 4096.0, 1.0 / n);
    candidates.push_back(t * dirs.col(j));
  }
  for (const Vec& x : candidates) {
    const double v = phi(x);
    if (v < 0.0) {
      std::ostringstream os;
      os << "witness is negative at " << format_point(x) << " (value " << v
         << "); the function is not admissible";
      throw NotAdmissible(os.str());
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Cap measures

CapMeasureResult cap_measure(int n, int k, double ratio) {
  validate_dims(n, k);
  if (!(ratio > 0.0 && ratio <= 1.0)) throw ParameterError("cap ratio must lie in (0, 1]");
  CapMeasureResult r;
  r.n = n;
  r.k = k;
  r.ratio = ratio;
  const double mass = grassmann_mass(n, k);
  r.exact = mass * cap_integral(n, k, ratio);
  r.measure = mass * r.exact;
  r.upper_constant = std::pow(0.5 * std::numbers::pi, k) * mass;
  r.lower_constant = empirical_lower_constant(n, k);
  r.upper_bound = r.upper_constant * std::pow(ratio, k);
  r.lower_bound = r.lower_constant * std::pow(ratio, k);
  r.stated_lower_constant = mass / std::pow(2.0, k - 1) * std::tgamma(k) * std::tgamma(n - k) /
                            std::tgamma(n);
  return r;
}

CapEstimate cap_measure_monte_carlo(int n, int k, double ratio, std::size_t count,
                                    std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio <= 1.0)) throw ParameterError("cap ratio must lie in (0, 1]");
  const GrassmannQuadrature q = haar_sample(n, k, count, seed);
  const Vec x = Vec::Unit(n, 0);
  std::vector<double> coords;
  q.project_all(x, coords);
  std::size_t inside = 0;
  double measure = 0.0;
  for (std::size_t j = 0; j < q.size(); ++j) {
    double d2 = 0.0;
    for (int r = 0; r < k; ++r) d2 += coords[r * q.size() + j] * coords[r * q.size() + j];
    if (d2 <= ratio * ratio) {
      ++inside;
      measure += q.weight(j);
    }
  }
  CapEstimate e;
  const double c = static_cast<double>(count);
  e.fraction = static_cast<double>(inside) / c;
  e.standard_error = std::sqrt(e.fraction * (1.0 - e.fraction) / c);
  e.measure = measure;
  e.measure_standard_error = q.total_mass() * e.standard_error;
  return e;
}

// ---------------------------------------------------------------------------
// Decay

DecayFit decay_exponent(const GrassmannFunction& psi, const GrassmannQuadrature& q,
                        const std::vector<double>& radii, int directions, std::uint64_t seed) {
  if (!psi.compact()) throw UnsupportedInput("decay fits need a compactly supported function");
  if (radii.size() < 2) throw ParameterError("decay fits need at least two radii");
  if (directions < 1) throw ParameterError("decay fits need at least one direction");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (i > 0 && !(radii[i] > radii[i - 1])) throw ParameterError("radii must be increasing");
  }
  if (!(radii.front() > psi.support_radius())) {
    throw ParameterError("radii must lie beyond the support radius");
  }
  const int n = psi.n();
  const Mat dirs = random_unit_vectors(n, static_cast<std::size_t>(directions), seed);
  Mat points(n, static_cast<Eigen::Index>(radii.size() * directions));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (int d = 0; d < directions; ++d) {
      points.col(static_cast<Eigen::Index>(i * directions + d)) = radii[i] * dirs.col(d);
    }
  }
  const std::vector<double> vals = dual_radon_many(psi, points, q);
  DecayFit fit;
  fit.radii = radii;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double s = 0.0;
    for (int d = 0; d < directions; ++d) {
      const double v = std::abs(vals[i * directions + d]);
      s += v;
      fit.sup_value = std::max(fit.sup_value, v);
    }
    const double mean = s / directions;
    if (!(mean > 0.0)) throw UndefinedResult("dual transform vanishes; the decay slope is undefined");
    fit.values.push_back(mean);
  }
  const std::size_t m = radii.size();
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += std::log(radii[i]);
    sy += std::log(fit.values[i]);
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = std::log(radii[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(fit.values[i]) - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

// ---------------------------------------------------------------------------
// Fourier slice

SliceResidual fourier_slice_residual(const SpatialField& f, const Subspace& h,
                                     const std::vector<Vec>& omegas,
                                     const PlaneQuadratureSpec& spec) {
  if (f.dim() != h.n()) throw ParameterError("field and plane live in different dimensions");
  SliceResidual out;
  if (f.empty() || omegas.empty()) return out;
  const GrassmannFunction g = radon_numeric(f, h.k(), spec);
  const std::vector<std::complex<double>> lhs = slice_fourier_many(g, h, omegas, spec);
  for (std::size_t i = 0; i < omegas.size(); ++i) {
    const std::complex<double> rhs = f.fourier(h.embed_perp(omegas[i]));
    const double diff = std::abs(lhs[i] - rhs);
    out.max_abs = std::max(out.max_abs, diff);
    out.max_scaled = std::max(out.max_scaled, diff / (1.0 + std::abs(rhs)));
  }
  const double scale = f.l1_scale();
  out.max_relative = scale > 0.0 ? out.max_abs / scale : out.max_abs;
  return out;
}

double fourier_slice_residual(const DiscreteMeasure& mu, const Subspace& h,
                              const std::vector<Vec>& omegas) {
  const DiscreteMeasure pushed = pushforward_measure(mu, h);
  double worst = 0.0;
  for (const Vec& omega : omegas) {
    worst = std::max(worst,
                     std::abs(measure_fourier(pushed, omega) - measure_fourier(mu, h.embed_perp(omega))));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Property (H)

std::size_t monomial_count(int n, int j) {
  if (n < 1 || j < 0) throw ParameterError("invalid monomial degree or dimension");
  // binomial(n + j - 1, j)
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (n - 1 + i) / i;
  return static_cast<std::size_t>(std::llround(c));
}

PropertyHResult property_H_residual(const GrassmannFunction& g, int max_degree,
                                    const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec) {
  if (g.n() != q.n() || g.k() != q.k()) throw ParameterError("function and quadrature differ in (n, k)");
  if (max_degree < 0 || max_degree > 3) throw ParameterError("moment degree must lie in 0..3");
  const int n = g.n(), k = g.k();
  const std::size_t needed = 3 * monomial_count(n, max_degree);
  if (q.size() < needed) {
    throw UnderdeterminedFit("moment fit of degree " + std::to_string(max_degree) + " needs at least " +
                             std::to_string(needed) + " planes, got " + std::to_string(q.size()));
  }
  const std::vector<Vec> dirs = moment_directions(k);
  const int degrees = max_degree + 1;

  // Per node and direction: signed moments (w.u)^j and absolute moments |w|^j.
  std::vector<std::function<double(const Vec&)>> weights;
  for (const Vec& u : dirs) {
    for (int j = 0; j < degrees; ++j) {
      weights.push_back([u, j](const Vec& z) { return std::pow(z.dot(u), j); });
    }
  }
  for (int j = 0; j < degrees; ++j) {
    weights.push_back([j](const Vec& z) { return std::pow(z.norm(), j); });
  }
  std::vector<std::vector<double>> moments(q.size());
  parallel::for_each_index(q.size(), [&](std::size_t i) {
    moments[i] = perp_moments(g, q.node(i), spec, weights);
  });

  PropertyHResult res;
  const std::size_t rows = q.size() * dirs.size();
  const std::size_t abs_base = dirs.size() * degrees;
  for (int j = 0; j < degrees; ++j) {
    const auto monos = monomials(n, j);
    Mat a(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(monos.size()));
    Vec b(static_cast<Eigen::Index>(rows));
    double abs_scale = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      abs_scale += std::abs(moments[i][abs_base + j]);
      for (std::size_t d = 0; d < dirs.size(); ++d) {
        const auto row = static_cast<Eigen::Index>(i * dirs.size() + d);
        const Vec u = q.node(i).embed_perp(dirs[d]);
        for (std::size_t c = 0; c < monos.size(); ++c) a(row, static_cast<Eigen::Index>(c)) = monomial(u, monos[c]);
        b(row) = moments[i][d * degrees + j];
      }
    }
    abs_scale /= static_cast<double>(q.size());
    const Vec coef = a.colPivHouseholderQr().solve(b);
    const double rmse = std::sqrt((a * coef - b).squaredNorm() / static_cast<double>(rows));
    const double rms = std::sqrt(b.squaredNorm() / static_cast<double>(rows));
    const double denom = std::max(rms, 1e-10 * abs_scale);
    res.residual.push_back(denom > 0.0 ? rmse / denom : 0.0);
    res.coefficients.push_back(coef);
    res.monomials.push_back(monos.size());
    if (j == 0) res.mass_mean = b.mean();
  }
  return res;
}

// ---------------------------------------------------------------------------
// Admissible functions

AdmissibleFunction admissible_from_density(const SpatialField& phi, double p, int k,
                                           const PlaneQuadratureSpec& spec) {
  if (!(p > 1.0)) throw ParameterError("admissible classes need p > 1");
  validate_dims(phi.dim(), k);
  if (phi.empty()) throw NotAdmissible("witness is the zero field");
  require_nonnegative(phi);
  const GrassmannFunction rw = has_custom(phi) ? radon_numeric(phi, k, spec) : radon_function(phi, k);
  return AdmissibleFunction{rw.pow(1.0 / (p - 1.0)), p, phi, rw};
}

AdmissibleFunction admissible_from_density(const DiscreteMeasure& mu, double p, int k) {
  if (!(p > 1.0)) throw ParameterError("admissible classes need p > 1");
  validate_dims(mu.dim(), k);
  throw NotAdmissible(
      "atomic witness: the pushforward of a point mass has no pointwise density, so h is "
      "undefined; use atomic witnesses only through pairings");
}

AdmissibleFunction scale_admissible(const AdmissibleFunction& f, double c) {
  if (!(c > 0.0)) throw ParameterError("admissible functions scale by c > 0 only");
  const double cw = std::pow(c, f.p - 1.0);
  return AdmissibleFunction{f.h.scaled(c), f.p, f.witness.scaled(cw), f.witness_radon.scaled(cw)};
}

double admissible_residual(const AdmissibleFunction& f, std::size_t samples, std::uint64_t seed,
                           const PlaneQuadratureSpec& spec) {
  const int n = f.h.n(), k = f.h.k();
  const GrassmannQuadrature planes = haar_sample(n, k, samples, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> normal;
  std::vector<Vec> offsets;
  for (std::size_t i = 0; i < samples; ++i) {
    const Window w = f.h.window(planes.node(i));
    const double spread = w.bounded() ? w.radius / 4.0 : 1.0;
    Vec z(k);
    for (int r = 0; r < k; ++r) z(r) = normal(rng);
    offsets.push_back(w.center.size() == k ? Vec(w.center + spread * z / std::sqrt(double(k)))
                                           : Vec(spread * z));
  }
  const std::vector<double> res = parallel::map(samples, [&](std::size_t i) {
    const Subspace& h = planes.node(i);
    const double lhs = std::pow(std::abs(f.h(h, offsets[i])), f.p - 1.0);
    const double rhs = radon(f.witness, h, offsets[i], spec);
    return std::abs(lhs - rhs) / (1.0 + lhs);
  });
  return *std::max_element(res.begin(), res.end());
}

AdmissibleFunction admissible_gaussian(int n, int k, double p, double a, double gamma) {
  validate_dims(n, k);
  if (!(p > 1.0)) throw ParameterError("admissible classes need p > 1");
  if (!(a > 0.0) || !(gamma > 0.0)) throw ParameterError("Gaussian rate and amplitude must be positive");
  const double b = (p - 1.0) * a;
  const double c = std::pow(gamma, p - 1.0) * std::pow(b / std::numbers::pi, 0.5 * (n - k));
  const SpatialField phi = SpatialField::gaussian(n, b, c);
  return AdmissibleFunction{GrassmannFunction::gaussian(n, k, a, gamma), p, phi,
                            radon_function(phi, k)};
}

DistanceEstimate admissible_distance(const GrassmannFunction& g, double p,
                                     const GrassmannFunction& w,
                                     const std::vector<AdmissibleFunction>& family,
                                     const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec,
                                     const DominationGrid& grid) {
  if (!(p > 1.0)) throw ParameterError("admissible classes need p > 1");
  if (grid.radial < 2 || grid.directions < 1) throw ParameterError("domination grid too small");
  if (g.n() != q.n() || g.k() != q.k()) throw ParameterError("function and quadrature differ in (n, k)");
  const int k = g.k();
  if (family.empty()) throw NoEstimate("empty admissible family");

  std::vector<Vec> dirs;
  if (k == 1) {
    dirs = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
  } else {
    const Mat d = random_unit_vectors(k, static_cast<std::size_t>(grid.directions), 0xd15ULL);
    for (Eigen::Index j = 0; j < d.cols(); ++j) dirs.push_back(d.col(j));
  }
  // Test points (node, offset) where g > 0.
  std::vector<std::size_t> node_of;
  std::vector<Vec> offsets;
  std::vector<double> gvals;
  for (std::size_t j = 0; j < q.size(); ++j) {
    const Subspace& h = q.node(j);
    const Window win = g.window(h);
    if (!win.bounded()) throw UnsupportedInput("g needs a bounded window for the domination check");
    for (int i = 0; i < grid.radial; ++i) {
      const double t = win.radius * i / (grid.radial - 1);
      for (const Vec& u : dirs) {
        if (i == 0 && &u != &dirs.front()) continue;
        const Vec z = win.center + t * u;
        const double v = g(h, z);
        if (v > 0.0) {
          node_of.push_back(j);
          offsets.push_back(z);
          gvals.push_back(v);
        }
      }
    }
  }
  if (gvals.empty()) throw NoEstimate("g vanishes at every test point");
  const double gnorm = grassmann_lp_norm(g, p, w, q, spec);
  if (!(gnorm > 0.0)) throw NoEstimate("g has zero weighted norm");

  DistanceEstimate est;
  est.ratio = kInf;
  est.ratios.assign(family.size(), kInf);
  for (std::size_t m = 0; m < family.size(); ++m) {
    const GrassmannFunction& f = family[m].h;
    if (f.n() != g.n() || f.k() != k) throw ParameterError("family member lives on another space");
    double c = 0.0;
    bool vanishes = false;
    for (std::size_t i = 0; i < gvals.size(); ++i) {
      const double fv = f(q.node(node_of[i]), offsets[i]);
      if (!(fv > 0.0)) {
        vanishes = true;
        break;
      }
      c = std::max(c, gvals[i] / fv);
    }
    if (vanishes || !std::isfinite(c)) continue;
    const double ratio = c * grassmann_lp_norm(f, p, w, q, spec) / gnorm;
    est.ratios[m] = ratio;
    if (ratio < est.ratio) {
      est.ratio = ratio;
      est.index = m;
      est.amplitude = c;
    }
  }
  if (!std::isfinite(est.ratio)) throw NoEstimate("no family member dominates g at the test points");
  return est;
}

}  // namespace kplane
