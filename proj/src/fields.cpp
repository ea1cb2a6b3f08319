#include "kplane/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kplane/error.hpp"
#include "kplane/kernels/kernels.hpp"
#include "kplane/quadrature.hpp"

namespace kplane {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Vec center_or_zero(int n, Vec center) {
  if (center.size() == 0) return Vec::Zero(n);
  if (center.size() != n) throw ParameterError("center dimension does not match field");
  return center;
}

double term_integral(const FieldTerm& t, int n) {
  switch (t.kind) {
    case FieldTerm::Kind::gaussian:
      return std::pow(std::numbers::pi / t.a, 0.5 * n);
    case FieldTerm::Kind::bump:
      return std::pow(t.radius, n) * quad::sphere_area(n) * bump_radial_moment(n);
    case FieldTerm::Kind::custom:
      break;
  }
  throw UnsupportedInput("integral of a custom field term is not available in closed form");
}

// Offsets z - P c at every node, node-minor like the input.
void shift_offsets(const GrassmannQuadrature& q, const double* coords, const Vec& center,
                   std::vector<double>& shifted) {
  const std::size_t m = q.size(), len = static_cast<std::size_t>(q.k()) * m;
  shifted.assign(coords, coords + len);
  if (center.isZero(0.0)) return;
  std::vector<double> pc;
  q.project_all(center, pc);
  for (std::size_t i = 0; i < len; ++i) shifted[i] -= pc[i];
}

}  // namespace

const char* decay_name(Decay d) {
  switch (d) {
    case Decay::compact:
      return "compact";
    case Decay::gaussian:
      return "gaussian";
    case Decay::power:
      return "power";
  }
  return "power";
}

double gaussian_tail_radius(double a) {
  if (!(a > 0.0)) throw ParameterError("Gaussian rate must be positive");
  return std::sqrt(-std::log(kTailLevel) / a);
}

double bump_profile(double s) {
  const double s2 = s * s;
  return s2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s2)) : 0.0;
}

Window enclose(const Window& a, const Window& b) {
  if (!a.bounded() || !b.bounded()) return Window{};
  const Decay decay =
      (a.decay == Decay::gaussian || b.decay == Decay::gaussian) ? Decay::gaussian : Decay::compact;
  const double d = (b.center - a.center).norm();
  if (d + b.radius <= a.radius) return Window{a.center, a.radius, decay};
  if (d + a.radius <= b.radius) return Window{b.center, b.radius, decay};
  const double r = 0.5 * (d + a.radius + b.radius);
  const Vec c = a.center + (r - a.radius) / d * (b.center - a.center);
  return Window{c, r, decay};
}

Window overlap(const Window& a, const Window& b) {
  if (!a.bounded()) return b;
  if (!b.bounded()) return a;
  if (a.decay == Decay::gaussian && b.decay == Decay::gaussian) {
    // rates are proportional to 1/r^2 and add under multiplication
    const double ra = 1.0 / (a.radius * a.radius), rb = 1.0 / (b.radius * b.radius);
    const Vec c = (ra * a.center + rb * b.center) / (ra + rb);
    return Window{c, 1.0 / std::sqrt(ra + rb), Decay::gaussian};
  }
  if (a.decay == Decay::compact && b.decay != Decay::compact) return a;
  if (b.decay == Decay::compact && a.decay != Decay::compact) return b;
  return a.radius <= b.radius ? a : b;
}

// ---------------------------------------------------------------------------
// SpatialField

SpatialField::SpatialField(int n) : n_(n) {
  if (n < 1) throw ParameterError("field dimension must be positive");
}

SpatialField SpatialField::gaussian(int n, double a, double weight, Vec center) {
  if (!(a > 0.0)) throw ParameterError("Gaussian rate must be positive");
  SpatialField f(n);
  FieldTerm t;
  t.kind = FieldTerm::Kind::gaussian;
  t.weight = weight;
  t.center = center_or_zero(n, std::move(center));
  t.a = a;
  t.decay = Decay::gaussian;
  f.terms_.push_back(std::move(t));
  return f;
}

SpatialField SpatialField::bump(int n, double radius, double weight, Vec center) {
  if (!(radius > 0.0)) throw ParameterError("bump radius must be positive");
  SpatialField f(n);
  FieldTerm t;
  t.kind = FieldTerm::Kind::bump;
  t.weight = weight;
  t.center = center_or_zero(n, std::move(center));
  t.radius = radius;
  t.decay = Decay::compact;
  f.terms_.push_back(std::move(t));
  return f;
}

SpatialField SpatialField::custom(int n, std::function<double(const Vec&)> fn,
                                  double support_radius, Decay decay) {
  if (!fn) throw ParameterError("custom field needs an evaluator");
  if (decay != Decay::power && !(support_radius > 0.0 && std::isfinite(support_radius))) {
    throw ParameterError("custom field needs a finite positive support radius");
  }
  SpatialField f(n);
  FieldTerm t;
  t.kind = FieldTerm::Kind::custom;
  t.center = Vec::Zero(n);
  t.radius = decay == Decay::power ? kInf : support_radius;
  t.decay = decay;
  t.custom = std::move(fn);
  f.terms_.push_back(std::move(t));
  return f;
}

double SpatialField::operator()(const Vec& x) const {
  if (x.size() != n_) throw ParameterError("point dimension does not match field");
  double s = 0.0;
  for (const auto& t : terms_) {
    switch (t.kind) {
      case FieldTerm::Kind::gaussian:
        s += t.weight * std::exp(-t.a * (x - t.center).squaredNorm());
        break;
      case FieldTerm::Kind::bump:
        s += t.weight * bump_profile((x - t.center).norm() / t.radius);
        break;
      case FieldTerm::Kind::custom:
        if (t.decay != Decay::compact || x.norm() <= t.radius) s += t.weight * t.custom(x);
        break;
    }
  }
  return s;
}

void SpatialField::evaluate_batch(const double* coords, std::size_t stride, std::size_t count,
                                  double* out) const {
  std::fill(out, out + count, 0.0);
  for (std::size_t i = 0; i < terms_.size(); ++i) add_term_batch(i, coords, stride, count, out);
}

void SpatialField::add_term_batch(std::size_t i, const double* coords, std::size_t stride,
                                  std::size_t count, double* out) const {
  const FieldTerm& t = terms_.at(i);
  switch (t.kind) {
    case FieldTerm::Kind::gaussian:
      kernels::add_gaussian(coords, stride, count, n_, t.center.data(), t.a, t.weight, out);
      break;
    case FieldTerm::Kind::bump:
      kernels::add_bump(coords, stride, count, n_, t.center.data(), t.radius, t.weight, out);
      break;
    case FieldTerm::Kind::custom: {
      Vec x(n_);
      for (std::size_t p = 0; p < count; ++p) {
        for (int d = 0; d < n_; ++d) x(d) = coords[d * stride + p];
        if (t.decay != Decay::compact || x.norm() <= t.radius) out[p] += t.weight * t.custom(x);
      }
      break;
    }
  }
}

SpatialField SpatialField::operator+(const SpatialField& other) const {
  if (other.n_ != n_) throw ParameterError("cannot add fields of different dimension");
  SpatialField f = *this;
  f.terms_.insert(f.terms_.end(), other.terms_.begin(), other.terms_.end());
  return f;
}

SpatialField SpatialField::operator-(const SpatialField& other) const {
  return *this + other.scaled(-1.0);
}

SpatialField SpatialField::scaled(double s) const {
  SpatialField f = *this;
  for (auto& t : f.terms_) t.weight *= s;
  return f;
}

SpatialField SpatialField::term(std::size_t i) const {
  if (i >= terms_.size()) throw ParameterError("term index out of range");
  SpatialField out(n_);
  out.terms_.push_back(terms_[i]);
  return out;
}

double SpatialField::support_radius() const {
  double r = 0.0;
  for (const auto& t : terms_) {
    if (t.decay != Decay::compact) return kInf;
    r = std::max(r, t.center.norm() + t.radius);
  }
  return r;
}

double SpatialField::truncation_radius() const {
  double r = 0.0;
  for (const auto& t : terms_) {
    const double reach = t.kind == FieldTerm::Kind::gaussian ? gaussian_tail_radius(t.a) : t.radius;
    r = std::max(r, t.center.norm() + reach);
  }
  return r;
}

Decay SpatialField::decay() const {
  Decay d = Decay::compact;
  for (const auto& t : terms_) {
    if (t.decay == Decay::power) return Decay::power;
    if (t.decay == Decay::gaussian) d = Decay::gaussian;
  }
  return d;
}

double SpatialField::integral() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.weight * term_integral(t, n_);
  return s;
}

double SpatialField::l1_scale() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.weight) * term_integral(t, n_);
  return s;
}

std::complex<double> SpatialField::fourier(const Vec& xi) const {
  if (xi.size() != n_) throw ParameterError("frequency dimension does not match field");
  std::complex<double> s = 0.0;
  const double rho = xi.norm();
  for (const auto& t : terms_) {
    const std::complex<double> shift = std::polar(1.0, -t.center.dot(xi));
    switch (t.kind) {
      case FieldTerm::Kind::gaussian:
        s += t.weight * std::pow(std::numbers::pi / t.a, 0.5 * n_) *
             std::exp(-rho * rho / (4.0 * t.a)) * shift;
        break;
      case FieldTerm::Kind::bump:
        s += t.weight * std::pow(t.radius, n_) * bump_fourier_radial(n_, t.radius * rho) * shift;
        break;
      case FieldTerm::Kind::custom:
        throw UnsupportedInput("Fourier transform of a custom field term is not available");
    }
  }
  return s;
}

double bump_radial_moment(int dim) {
  return quad::integrate([dim](double s) { return bump_profile(s) * std::pow(s, dim - 1); }, 0.0,
                         1.0, 480);
}

double bump_fourier_radial(int n, double rho) {
  if (rho < 1e-12) return quad::sphere_area(n) * bump_radial_moment(n);
  if (n == 1) {
    const int budget1 = std::max(480, static_cast<int>(24.0 * rho));
    return 2.0 * quad::integrate([&](double s) { return bump_profile(s) * std::cos(rho * s); }, 0.0, 1.0,
                                 budget1);
  }
  // Hankel transform of a radial function
  const double nu = 0.5 * n - 1.0;
  const int budget = std::max(480, static_cast<int>(24.0 * rho));
  const double inner = quad::integrate(
      [&](double s) {
        return bump_profile(s) * std::cyl_bessel_j(nu, rho * s) * std::pow(s, 0.5 * n);
      },
      0.0, 1.0, budget);
  return std::pow(2.0 * std::numbers::pi, 0.5 * n) * std::pow(rho, 1.0 - 0.5 * n) * inner;
}

// ---------------------------------------------------------------------------
// GrassmannFunction

GrassmannFunction::GrassmannFunction(int n, int k, Eval eval, WindowFn window, bool even,
                                     double support_radius, Batch batch)
    : n_(n),
      k_(k),
      eval_(std::move(eval)),
      window_(std::move(window)),
      even_(even),
      support_radius_(support_radius),
      batch_(std::move(batch)) {
  validate_dims(n, k);
  if (!eval_) throw ParameterError("Grassmann function needs an evaluator");
  if (!window_) {
    window_ = [k](const Subspace&) { return Window{Vec::Zero(k), kInf, Decay::power}; };
  }
}

void GrassmannFunction::evaluate_nodes(const GrassmannQuadrature& q, const double* coords,
                                       double* out) const {
  if (q.n() != n_ || q.k() != k_) throw ParameterError("function and quadrature differ in (n, k)");
  if (batch_) {
    batch_(q, coords, out);
    return;
  }
  const std::size_t m = q.size();
  Vec z(k_);
  for (std::size_t j = 0; j < m; ++j) {
    for (int r = 0; r < k_; ++r) z(r) = coords[r * m + j];
    out[j] = eval_(q.node(j), z);
  }
}

GrassmannFunction GrassmannFunction::constant(int n, int k, double c) {
  return GrassmannFunction(
      n, k, [c](const Subspace&, const Vec&) { return c; }, nullptr, true, c == 0.0 ? 0.0 : kInf,
      [c](const GrassmannQuadrature& q, const double*, double* out) {
        std::fill(out, out + q.size(), c);
      });
}

GrassmannFunction GrassmannFunction::gaussian(int n, int k, double a, double amplitude,
                                              Vec center) {
  validate_dims(n, k);
  const double tail = gaussian_tail_radius(a);
  const Vec c = center_or_zero(n, std::move(center));
  const bool centered = c.isZero(0.0);
  auto eval = [a, amplitude, c, centered](const Subspace& h, const Vec& z) {
    const double d2 = centered ? z.squaredNorm() : (z - h.project_complement(c)).squaredNorm();
    return amplitude * std::exp(-a * d2);
  };
  auto window = [c, tail](const Subspace& h) {
    return Window{h.project_complement(c), tail, Decay::gaussian};
  };
  auto batch = [a, amplitude, c, k](const GrassmannQuadrature& q, const double* coords,
                                    double* out) {
    std::vector<double> shifted;
    shift_offsets(q, coords, c, shifted);
    std::fill(out, out + q.size(), 0.0);
    const std::vector<double> origin(k, 0.0);
    kernels::add_gaussian(shifted.data(), q.size(), q.size(), k, origin.data(), a, amplitude, out);
  };
  return GrassmannFunction(n, k, eval, window, centered, kInf, batch);
}

GrassmannFunction GrassmannFunction::bump(int n, int k, double radius, double amplitude,
                                          Vec center) {
  validate_dims(n, k);
  if (!(radius > 0.0)) throw ParameterError("bump radius must be positive");
  const Vec c = center_or_zero(n, std::move(center));
  const bool centered = c.isZero(0.0);
  auto eval = [radius, amplitude, c, centered](const Subspace& h, const Vec& z) {
    const double d = centered ? z.norm() : (z - h.project_complement(c)).norm();
    return amplitude * bump_profile(d / radius);
  };
  auto window = [c, radius](const Subspace& h) {
    return Window{h.project_complement(c), radius, Decay::compact};
  };
  auto batch = [radius, amplitude, c, k](const GrassmannQuadrature& q, const double* coords,
                                         double* out) {
    std::vector<double> shifted;
    shift_offsets(q, coords, c, shifted);
    std::fill(out, out + q.size(), 0.0);
    const std::vector<double> origin(k, 0.0);
    kernels::add_bump(shifted.data(), q.size(), q.size(), k, origin.data(), radius, amplitude, out);
  };
  const double support = amplitude == 0.0 ? 0.0 : c.norm() + radius;
  return GrassmannFunction(n, k, eval, window, centered, support, batch);
}

namespace {

constexpr std::size_t kMaxParts = 4096;

void require_same_space(const GrassmannFunction& a, const GrassmannFunction& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw ParameterError("Grassmann functions live on different spaces");
  }
}

std::vector<GrassmannFunction> concat_parts(const GrassmannFunction& a, const GrassmannFunction& b) {
  std::vector<GrassmannFunction> out = a.parts();
  for (auto& p : b.parts()) out.push_back(std::move(p));
  if (out.size() > kMaxParts) return {};
  return out;
}

std::vector<GrassmannFunction> product_parts(const GrassmannFunction& a, const GrassmannFunction& b) {
  const auto pa = a.parts(), pb = b.parts();
  if (pa.size() * pb.size() <= 1 || pa.size() * pb.size() > kMaxParts) return {};
  std::vector<GrassmannFunction> out;
  for (const auto& x : pa) {
    for (const auto& y : pb) out.push_back(x * y);
  }
  return out;
}

std::vector<GrassmannFunction> scaled_parts(const GrassmannFunction& a, double s) {
  const auto pa = a.parts();
  if (pa.size() <= 1) return {};
  std::vector<GrassmannFunction> out;
  for (const auto& x : pa) out.push_back(x.scaled(s));
  return out;
}

}  // namespace

GrassmannFunction GrassmannFunction::operator+(const GrassmannFunction& other) const {
  require_same_space(*this, other);
  auto a = std::make_shared<const GrassmannFunction>(*this);
  auto b = std::make_shared<const GrassmannFunction>(other);
  return GrassmannFunction(
      n_, k_, [a, b](const Subspace& h, const Vec& z) { return (*a)(h, z) + (*b)(h, z); },
      [a, b](const Subspace& h) { return enclose(a->window(h), b->window(h)); }, even_ && other.even_,
      std::max(support_radius_, other.support_radius_),
      [a, b](const GrassmannQuadrature& q, const double* coords, double* out) {
        std::vector<double> tmp(q.size());
        a->evaluate_nodes(q, coords, out);
        b->evaluate_nodes(q, coords, tmp.data());
        for (std::size_t j = 0; j < q.size(); ++j) out[j] += tmp[j];
      }).with_parts(concat_parts(*this, other));
}

GrassmannFunction GrassmannFunction::operator-(const GrassmannFunction& other) const {
  return *this + other.scaled(-1.0);
}

GrassmannFunction GrassmannFunction::operator*(const GrassmannFunction& other) const {
  require_same_space(*this, other);
  auto a = std::make_shared<const GrassmannFunction>(*this);
  auto b = std::make_shared<const GrassmannFunction>(other);
  return GrassmannFunction(
      n_, k_, [a, b](const Subspace& h, const Vec& z) { return (*a)(h, z) * (*b)(h, z); },
      [a, b](const Subspace& h) { return overlap(a->window(h), b->window(h)); }, even_ && other.even_,
      std::min(support_radius_, other.support_radius_),
      [a, b](const GrassmannQuadrature& q, const double* coords, double* out) {
        std::vector<double> tmp(q.size());
        a->evaluate_nodes(q, coords, out);
        b->evaluate_nodes(q, coords, tmp.data());
        for (std::size_t j = 0; j < q.size(); ++j) out[j] *= tmp[j];
      }).with_parts(product_parts(*this, other));
}

GrassmannFunction GrassmannFunction::scaled(double s) const {
  auto a = std::make_shared<const GrassmannFunction>(*this);
  return GrassmannFunction(
      n_, k_, [a, s](const Subspace& h, const Vec& z) { return s * (*a)(h, z); }, window_, even_,
      s == 0.0 ? 0.0 : support_radius_,
      [a, s](const GrassmannQuadrature& q, const double* coords, double* out) {
        a->evaluate_nodes(q, coords, out);
        for (std::size_t j = 0; j < q.size(); ++j) out[j] *= s;
      }).with_parts(scaled_parts(*this, s));
}

GrassmannFunction GrassmannFunction::pow(double q) const {
  if (!(q > 0.0)) throw ParameterError("exponent must be positive");
  if (q == 2.0) return *this * *this;
  auto a = std::make_shared<const GrassmannFunction>(*this);
  auto window = [a, q](const Subspace& h) {
    Window w = a->window(h);
    if (w.decay == Decay::gaussian) w.radius /= std::sqrt(q);
    return w;
  };
  return GrassmannFunction(
      n_, k_, [a, q](const Subspace& h, const Vec& z) { return std::pow(std::abs((*a)(h, z)), q); },
      window, even_, support_radius_,
      [a, q](const GrassmannQuadrature& quad, const double* coords, double* out) {
        a->evaluate_nodes(quad, coords, out);
        for (std::size_t j = 0; j < quad.size(); ++j) out[j] = std::pow(std::abs(out[j]), q);
      });
}

std::vector<GrassmannFunction> GrassmannFunction::parts() const {
  if (parts_ && !parts_->empty()) return *parts_;
  GrassmannFunction self = *this;
  self.parts_.reset();
  return {self};
}

GrassmannFunction GrassmannFunction::with_parts(std::vector<GrassmannFunction> parts) const {
  GrassmannFunction out = *this;
  if (parts.size() > 1) {
    out.parts_ = std::make_shared<const std::vector<GrassmannFunction>>(std::move(parts));
  } else {
    out.parts_.reset();
  }
  return out;
}

GrassmannFunction GrassmannFunction::map(std::function<double(double)> fn) const {
  auto a = std::make_shared<const GrassmannFunction>(*this);
  return GrassmannFunction(
      n_, k_, [a, fn](const Subspace& h, const Vec& z) { return fn((*a)(h, z)); }, window_, even_,
      support_radius_, [a, fn](const GrassmannQuadrature& q, const double* coords, double* out) {
        a->evaluate_nodes(q, coords, out);
        for (std::size_t j = 0; j < q.size(); ++j) out[j] = fn(out[j]);
      });
}

// ---------------------------------------------------------------------------
// DiscreteMeasure

DiscreteMeasure::DiscreteMeasure(Mat atoms, Vec weights)
    : atoms_(std::move(atoms)), weights_(std::move(weights)) {
  if (atoms_.cols() != weights_.size()) throw ParameterError("atom and weight counts differ");
  if (atoms_.rows() < 1) throw ParameterError("measure dimension must be positive");
  if (!atoms_.allFinite() || !weights_.allFinite()) {
    throw ParameterError("measure atoms and weights must be finite");
  }
}

bool DiscreteMeasure::nonnegative() const { return weights_.size() == 0 || weights_.minCoeff() >= 0.0; }

double DiscreteMeasure::total_variation() const { return weights_.cwiseAbs().sum(); }

double DiscreteMeasure::total_mass() const { return weights_.sum(); }

double gaussian_radon_closed_form(double a, int n, int k, double z_norm) {
  if (!(a > 0.0)) throw ParameterError("Gaussian rate must be positive");
  validate_dims(n, k);
  return std::pow(std::numbers::pi / a, 0.5 * (n - k)) * std::exp(-a * z_norm * z_norm);
}

std::complex<double> measure_fourier(const DiscreteMeasure& mu, const Vec& xi) {
  if (xi.size() != mu.dim()) throw ParameterError("frequency dimension does not match measure");
  const Vec phase = mu.atoms().transpose() * xi;
  double c = 0.0, s = 0.0;
  kernels::phase_sums(phase.data(), mu.weights().data(), mu.size(), &c, &s);
  return {c, -s};
}

}  // namespace kplane
