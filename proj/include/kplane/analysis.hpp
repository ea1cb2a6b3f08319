#pragma once

// Cap measures, decay of dual transforms, Fourier-slice residuals, the
// moment condition (H), and admissible functions with the distance d_{p,w}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kplane/fields.hpp"
#include "kplane/geometry.hpp"
#include "kplane/transforms.hpp"

namespace kplane {

// ---------------------------------------------------------------------------
// Cap measures: planes H with |P_{H-perp} x| <= r, ratio s = r / |x|.

struct CapMeasureResult {
  int n = 0, k = 0;
  double ratio = 0.0;
  /// |S^{k-1}||S^{n-k-1}|/|S^{n-1}| int_0^{asin s} sin^{k-1} cos^{n-k-1}
  /// (the Haar probability of the cap; 1 at s = 1).
  double exact = 0.0;
  /// total_mass * exact: the cap's measure under the Grassmannian normalization.
  double measure = 0.0;
  double lower_constant = 0.0;  // min over (0, 1] of exact(s) / s^k
  double upper_constant = 0.0;  // (pi/2)^k |S^{k-1}||S^{n-k-1}|/|S^{n-1}|
  double lower_bound = 0.0;     // lower_constant * s^k
  double upper_bound = 0.0;     // upper_constant * s^k
  /// The closed-form lower constant 2^{1-k} |G| Gamma(k)Gamma(n-k)/Gamma(n);
  /// reported only.
  double stated_lower_constant = 0.0;
};

CapMeasureResult cap_measure(int n, int k, double ratio);

struct CapEstimate {
  double fraction = 0.0;        // share of sampled planes inside the cap
  double standard_error = 0.0;  // of the fraction
  double measure = 0.0;         // weighted node sum over the cap
  double measure_standard_error = 0.0;
};

/// Haar Monte Carlo estimate with x = e_1 and r = ratio.
CapEstimate cap_measure_monte_carlo(int n, int k, double ratio, std::size_t count,
                                    std::uint64_t seed);

// ---------------------------------------------------------------------------
// Decay of R* psi for compactly supported psi.

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> radii;
  std::vector<double> values;  // mean |R* psi| over the directions at each radius
  double sup_value = 0.0;      // max |R* psi| over all evaluated points
};

/// Least-squares slope of log mean|R* psi(r theta)| against log r over
/// `directions` random unit vectors theta.
DecayFit decay_exponent(const GrassmannFunction& psi, const GrassmannQuadrature& q,
                        const std::vector<double>& radii, int directions, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Fourier-slice residuals.

struct SliceResidual {
  double max_abs = 0.0;
  /// max_abs divided by sum |w_i| |term_i|_1, an upper bound of |f-hat|.
  double max_relative = 0.0;
  /// max over omega of |difference| / (1 + |f-hat|).
  double max_scaled = 0.0;
};

/// Compares the slice transform of the numerically computed R_{n-k} f with
/// f-hat on H-perp.
SliceResidual fourier_slice_residual(const SpatialField& f, const Subspace& h,
                                     const std::vector<Vec>& omegas,
                                     const PlaneQuadratureSpec& spec);

/// Same identity for an atomic measure: pushforward transform against mu-hat.
double fourier_slice_residual(const DiscreteMeasure& mu, const Subspace& h,
                              const std::vector<Vec>& omegas);

// ---------------------------------------------------------------------------
// Moment condition (H).

struct PropertyHResult {
  std::vector<double> residual;     // relative fit residual for j = 0..J
  std::vector<Vec> coefficients;    // fitted monomial coefficients per degree
  std::vector<std::size_t> monomials;
  double mass_mean = 0.0;           // mean of int g(H, .) over the planes
};

/// Fits, for each j <= max_degree, a homogeneous degree-j polynomial on R^n to
/// the moments int (w.u)^j g(H, w) dw, u unit in H-perp, over the nodes.
PropertyHResult property_H_residual(const GrassmannFunction& g, int max_degree,
                                    const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec);

/// Number of monomials of exact degree j in n variables.
std::size_t monomial_count(int n, int j);

// ---------------------------------------------------------------------------
// Admissible functions: h^{p-1} = R_{n-k}(witness), witness >= 0.

struct AdmissibleFunction {
  GrassmannFunction h;
  double p;
  SpatialField witness;
  GrassmannFunction witness_radon;  // R_{n-k} witness, closed-form route
};

/// h = (R_{n-k} phi)^{1/(p-1)}. Throws NotAdmissible if phi takes negative
/// values (checked exactly when all weights are >= 0, else on sample points).
/// Fields with custom terms are transformed by plane quadrature under `spec`.
AdmissibleFunction admissible_from_density(const SpatialField& phi, double p, int k,
                                           const PlaneQuadratureSpec& spec = {});
/// Atomic witnesses have no pointwise h; always throws NotAdmissible.
AdmissibleFunction admissible_from_density(const DiscreteMeasure& mu, double p, int k);

/// Scales an admissible function by c > 0 (witness scales by c^{p-1}).
AdmissibleFunction scale_admissible(const AdmissibleFunction& f, double c);

/// Max over `samples` random (H, z) of
/// |h^{p-1} - R witness| / (1 + |h|^{p-1}), with R witness by plane quadrature.
double admissible_residual(const AdmissibleFunction& f, std::size_t samples, std::uint64_t seed,
                           const PlaneQuadratureSpec& spec);

/// h = gamma e^{-a|z|^2} with witness ((p-1)a/pi)^{(n-k)/2} gamma^{p-1}
/// e^{-(p-1) a |x|^2}.
AdmissibleFunction admissible_gaussian(int n, int k, double p, double a, double gamma = 1.0);

struct DistanceEstimate {
  double ratio = 0.0;          // |c f|_{L^p(w)} / |g|_{L^p(w)}
  std::size_t index = 0;       // argmin within the family
  double amplitude = 1.0;      // c
  std::vector<double> ratios;  // per member, +inf when excluded
};

struct DominationGrid {
  int radial = 12;
  int directions = 4;  // per node, for k >= 2

  bool operator==(const DominationGrid&) const = default;
};

/// Upper estimate of the distance from g to the admissible class: the least
/// ratio |c f|/|g| over the family, where c = max g/f over the test points is
/// the smallest multiple of f (still admissible) dominating g there. Members
/// that vanish where g > 0 are excluded; throws NoEstimate if nothing remains.
/// Test points: at every node, `radial` offsets across the window of g along
/// +-e_1 (k = 1) or `directions` fixed unit vectors (k >= 2).
DistanceEstimate admissible_distance(const GrassmannFunction& g, double p,
                                     const GrassmannFunction& w,
                                     const std::vector<AdmissibleFunction>& family,
                                     const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec,
                                     const DominationGrid& grid = {});

}  // namespace kplane
