#pragma once

// Scalar fields on R^n, functions on the affine Grassmannian and finite
// atomic measures.

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "kplane/geometry.hpp"
#include "kplane/linalg.hpp"

namespace kplane {

enum class Decay { compact, gaussian, power };

const char* decay_name(Decay d);

/// Peak-relative level below which Gaussian tails are dropped.
inline constexpr double kTailLevel = 1e-16;

/// Radius where e^{-a r^2} falls to kTailLevel.
double gaussian_tail_radius(double a);

/// exp(1 - 1/(1 - s^2)) for |s| < 1, else 0.
double bump_profile(double s);

struct FieldTerm {
  enum class Kind { gaussian, bump, custom };
  Kind kind = Kind::gaussian;
  double weight = 1.0;
  Vec center;
  double a = 1.0;       // gaussian rate
  double radius = 1.0;  // bump radius, or support radius of a custom term
  Decay decay = Decay::gaussian;
  std::function<double(const Vec&)> custom;
};

/// Finite linear combination of Gaussians e^{-a|x-c|^2}, smooth bumps
/// exp(1 - 1/(1 - |x-c|^2/r^2)) and user supplied terms.
class SpatialField {
 public:
  explicit SpatialField(int n);

  static SpatialField gaussian(int n, double a, double weight = 1.0, Vec center = {});
  static SpatialField bump(int n, double radius, double weight = 1.0, Vec center = {});
  /// `support_radius` is the radius of a ball about the origin outside which
  /// fn vanishes (compact) or below which its tail is negligible (gaussian).
  static SpatialField custom(int n, std::function<double(const Vec&)> fn, double support_radius,
                             Decay decay);

  int dim() const { return n_; }
  const std::vector<FieldTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  double operator()(const Vec& x) const;
  /// out[i] = f(p_i) for dimension-major coords (coordinate d of p_i at coords[d*stride+i]).
  void evaluate_batch(const double* coords, std::size_t stride, std::size_t count,
                      double* out) const;
  /// Adds term i at every point to out.
  void add_term_batch(std::size_t i, const double* coords, std::size_t stride, std::size_t count,
                      double* out) const;

  SpatialField operator+(const SpatialField& other) const;
  SpatialField operator-(const SpatialField& other) const;
  SpatialField scaled(double s) const;
  /// The field made of term i alone.
  SpatialField term(std::size_t i) const;

  /// Radius of a ball about the origin containing the support; infinite
  /// unless every term is compact.
  double support_radius() const;
  /// Radius beyond which all terms are negligible or zero.
  double truncation_radius() const;
  Decay decay() const;

  /// Exact integral over R^n (custom terms are not supported).
  double integral() const;
  /// Sum of |weight| times the L1 norm of each term.
  double l1_scale() const;
  /// Fourier transform  int f(x) e^{-i x.xi} dx.
  std::complex<double> fourier(const Vec& xi) const;

 private:
  int n_;
  std::vector<FieldTerm> terms_;
};

/// int_0^1 b(s) s^{dim-1} ds for the standard bump b.
double bump_radial_moment(int dim);

/// Fourier transform of the unit bump b(|x|) on R^n at |xi| = rho.
double bump_fourier_radial(int n, double rho);

/// Ball in H-perp coordinates outside which a Grassmann function is zero
/// (compact) or negligible (gaussian). Infinite radius means neither.
struct Window {
  Vec center;
  double radius = std::numeric_limits<double>::infinity();
  Decay decay = Decay::power;

  bool bounded() const { return std::isfinite(radius); }
};

/// Smallest ball containing both windows (unbounded if either is).
Window enclose(const Window& a, const Window& b);
/// Window carrying the product of functions with windows a and b.
Window overlap(const Window& a, const Window& b);

/// A function g(H, z) on pairs of a plane H and an offset z in H-perp
/// coordinates.
class GrassmannFunction {
 public:
  using Eval = std::function<double(const Subspace&, const Vec&)>;
  using WindowFn = std::function<Window(const Subspace&)>;
  /// Evaluates g at every node j with offsets coords[r * nodes + j]; writes out[j].
  using Batch = std::function<void(const GrassmannQuadrature&, const double* coords, double* out)>;

  GrassmannFunction(int n, int k, Eval eval, WindowFn window, bool even, double support_radius,
                    Batch batch = nullptr);

  static GrassmannFunction constant(int n, int k, double c);
  /// amplitude * e^{-a |z - P c|^2} with P the projection onto H-perp.
  static GrassmannFunction gaussian(int n, int k, double a, double amplitude = 1.0, Vec center = {});
  /// amplitude * b(|z - P c| / radius).
  static GrassmannFunction bump(int n, int k, double radius, double amplitude = 1.0,
                                Vec center = {});

  int n() const { return n_; }
  int k() const { return k_; }
  bool even() const { return even_; }
  /// Bound on |z| over the support for all H; infinite if not compact.
  double support_radius() const { return support_radius_; }
  bool compact() const { return std::isfinite(support_radius_); }

  double operator()(const Subspace& h, const Vec& z) const { return eval_(h, z); }
  Window window(const Subspace& h) const { return window_(h); }
  void evaluate_nodes(const GrassmannQuadrature& q, const double* coords, double* out) const;

  GrassmannFunction operator+(const GrassmannFunction& other) const;
  GrassmannFunction operator-(const GrassmannFunction& other) const;
  GrassmannFunction operator*(const GrassmannFunction& other) const;
  GrassmannFunction scaled(double s) const;
  /// |g|^q (q > 0).
  GrassmannFunction pow(double q) const;
  /// Pointwise map u -> fn(u); the window and support are kept.
  GrassmannFunction map(std::function<double(double)> fn) const;

  /// Summands whose sum is this function, each with its own (tighter) window.
  /// Sums, scalings and products of sums keep the split; a function without
  /// one is its own single part.
  std::vector<GrassmannFunction> parts() const;
  /// Attaches a split into summands (the caller guarantees the sum matches).
  GrassmannFunction with_parts(std::vector<GrassmannFunction> parts) const;

 private:
  int n_, k_;
  Eval eval_;
  WindowFn window_;
  bool even_;
  double support_radius_;
  Batch batch_;
  std::shared_ptr<const std::vector<GrassmannFunction>> parts_;
};

/// Finite signed atomic measure. Atoms are columns of `atoms`.
class DiscreteMeasure {
 public:
  DiscreteMeasure(Mat atoms, Vec weights);

  int dim() const { return static_cast<int>(atoms_.rows()); }
  std::size_t size() const { return static_cast<std::size_t>(weights_.size()); }
  const Mat& atoms() const { return atoms_; }
  const Vec& weights() const { return weights_; }
  bool nonnegative() const;
  double total_variation() const;
  double total_mass() const;

 private:
  Mat atoms_;
  Vec weights_;
};

/// Radon transform of e^{-a|x|^2} over any (n-k)-plane at offset norm z_norm.
double gaussian_radon_closed_form(double a, int n, int k, double z_norm);

/// sum_j w_j e^{-i x_j . xi}
std::complex<double> measure_fourier(const DiscreteMeasure& mu, const Vec& xi);

}  // namespace kplane
