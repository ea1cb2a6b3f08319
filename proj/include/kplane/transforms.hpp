#pragma once

// The (n-k)-plane Radon transform, its dual, the Fourier transform along
// H-perp, pushforwards of atomic measures, and Grassmannian pairings/norms.
//
// Normalization: for k = 1 the classical hyperplane transforms relate to the
// ones here by R = R_{n-1} and R* = 2 R*_{n-1}; see classical_dual().

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kplane/fields.hpp"
#include "kplane/geometry.hpp"
#include "kplane/quadrature.hpp"

namespace kplane {

enum class PlaneScheme { tensor_gauss, polar_gauss, monte_carlo };

const char* scheme_name(PlaneScheme s);
/// Accepts "tensor-gauss", "polar-gauss", "monte-carlo".
PlaneScheme parse_scheme(const std::string& name);

struct PlaneQuadratureSpec {
  PlaneScheme scheme = PlaneScheme::polar_gauss;
  int budget = 48;                 // nodes per axis (Gauss) or total (Monte Carlo)
  double truncation_radius = 8.0;  // fallback radius for fields without metadata
  std::uint64_t seed = 0;

  void validate() const;
  bool operator==(const PlaneQuadratureSpec&) const = default;
};

/// Rule on the ball of radius `radius` about 0 in R^dim following the spec.
/// Unit-radius rules are cached and rescaled.
quad::PointRule plane_rule(int dim, double radius, const PlaneQuadratureSpec& spec);

/// int_H f(y + z) dy by quadrature over the section of each term's support
/// ball; z is given in H-perp coordinates.
double radon(const SpatialField& f, const Subspace& h, const Vec& z, const PlaneQuadratureSpec& spec);

/// R_{n-k} f as a Grassmann function evaluated by plane quadrature.
GrassmannFunction radon_numeric(const SpatialField& f, int k, const PlaneQuadratureSpec& spec);

/// R_{n-k} f as a Grassmann function from per-term formulas: closed form for
/// Gaussians, a one-dimensional radial integral for bumps.
GrassmannFunction radon_function(const SpatialField& f, int k);

/// int over R^m of b(sqrt(|y|^2 + d^2) / radius) dy: the m-plane integral of
/// a bump of the given radius at distance d from its center.
double bump_section_integral(int m, double radius, double d);

/// Window in H-perp coordinates carrying R_{n-k} f(H, .).
Window radon_window(const SpatialField& f, const Subspace& h);

/// int_G g(H, P_{H-perp} x) dnu(H) by the quadrature rule.
double dual_radon(const GrassmannFunction& g, const Vec& x, const GrassmannQuadrature& q);

/// dual_radon at every column of `points`, in parallel.
std::vector<double> dual_radon_many(const GrassmannFunction& g, const Mat& points,
                                    const GrassmannQuadrature& q);

/// Classical hyperplane dual transform from the k = 1 Grassmannian one.
inline double classical_dual(double grassmann_value) { return 2.0 * grassmann_value; }

/// int_{H-perp} e^{-i omega.z} g(H, z) dz, omega in H-perp coordinates.
std::complex<double> slice_fourier(const GrassmannFunction& g, const Subspace& h, const Vec& omega,
                                   const PlaneQuadratureSpec& spec);

/// slice_fourier at several frequencies from one evaluation of g(H, .).
std::vector<std::complex<double>> slice_fourier_many(const GrassmannFunction& g, const Subspace& h,
                                                     const std::vector<Vec>& omegas,
                                                     const PlaneQuadratureSpec& spec);

/// Image of mu under the projection onto H-perp (atoms within 1e-10 merge).
DiscreteMeasure pushforward_measure(const DiscreteMeasure& mu, const Subspace& h);

/// int_{H-perp} g(H, z) dz over the window of g.
double integrate_perp(const GrassmannFunction& g, const Subspace& h,
                      const PlaneQuadratureSpec& spec);

/// out[i] = int_{H-perp} weights[i](z) g(H, z) dz, all over the window of g.
std::vector<double> perp_moments(const GrassmannFunction& g, const Subspace& h,
                                 const PlaneQuadratureSpec& spec,
                                 const std::vector<std::function<double(const Vec&)>>& weights);

/// <g, psi>_k = int_G int_{H-perp} g psi dz dnu.
double pairing(const GrassmannFunction& g, const GrassmannFunction& psi,
               const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec);

/// (int_G int_{H-perp} |g|^p w dz dnu)^{1/p}.
double grassmann_lp_norm(const GrassmannFunction& g, double p, const GrassmannFunction& w,
                         const GrassmannQuadrature& q, const PlaneQuadratureSpec& spec);
double grassmann_lp_norm(const GrassmannFunction& g, double p, const GrassmannQuadrature& q,
                         const PlaneQuadratureSpec& spec);

/// int over the ball |x - center| <= radius of F(x) dx; F receives a batch of
/// points (n x count) and writes count values.
double integrate_ball(const std::function<void(const Mat& points, double* out)>& f, int n,
                      const Vec& center, double radius, const PlaneQuadratureSpec& spec);

/// Deterministic product rule on the Grassmannian for k = 1 (planes indexed
/// by a unit normal) or k = n - 1 (lines indexed by a unit direction), n <= 4.
/// Every plane appears once for each of its two unit normals (or directions).
GrassmannQuadrature sphere_grassmann_rule(int n, int k, int budget);

}  // namespace kplane
