#pragma once

// Linear subspaces of R^n, Haar quadrature on the Grassmannian of
// (n-k)-planes, and bi-spherical integration on S^{n-1}.

#include <cstdint>
#include <functional>
#include <vector>

#include "kplane/linalg.hpp"
#include "kplane/quadrature.hpp"

namespace kplane {

/// A linear (n-k)-plane H in R^n held as orthonormal frames of H and of its
/// orthogonal complement. Coordinates "in H-perp" always refer to frame_perp.
class Subspace {
 public:
  /// Validates orthonormality and completeness of the frames (tolerance 1e-12).
  Subspace(Mat frame_h, Mat frame_perp);

  /// Orthonormalizes the columns of `basis` (n x (n-k)) and completes the frame.
  static Subspace from_span(const Mat& basis);
  /// Plane whose orthogonal complement is spanned by the columns of `normals`.
  static Subspace from_normals(const Mat& normals);

  int n() const { return static_cast<int>(frame_h_.rows()); }
  int k() const { return static_cast<int>(frame_perp_.cols()); }
  int dim() const { return static_cast<int>(frame_h_.cols()); }

  const Mat& frame_h() const { return frame_h_; }
  const Mat& frame_perp() const { return frame_perp_; }

  /// Coordinates of the orthogonal projection onto H-perp.
  Vec project_complement(const Vec& x) const;
  /// Coordinates of the orthogonal projection onto H.
  Vec project_plane(const Vec& x) const;
  /// Point of R^n with the given H-perp coordinates.
  Vec embed_perp(const Vec& z) const;
  /// Point of R^n with the given H coordinates.
  Vec embed_plane(const Vec& y) const;

  Mat projector_perp() const;
  /// Same plane up to rotation of the frames.
  bool same_plane(const Subspace& other, double tol = 1e-10) const;

 private:
  Mat frame_h_;
  Mat frame_perp_;
};

/// |S^{k-1}| |S^{n-k-1}| / |S^{n-1}|, the total Haar mass of the Grassmannian.
double grassmann_mass(int n, int k);

/// Weighted nodes on the Grassmannian of linear (n-k)-planes.
class GrassmannQuadrature {
 public:
  GrassmannQuadrature(int n, int k, std::vector<Subspace> nodes, std::vector<double> weights);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return nodes_.size(); }
  const Subspace& node(std::size_t j) const { return nodes_[j]; }
  double weight(std::size_t j) const { return weights_[j]; }
  const std::vector<Subspace>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double total_mass() const { return total_mass_; }

  /// coords[r * size() + j] = r-th H-perp coordinate of x at node j.
  void project_all(const Vec& x, std::vector<double>& coords) const;

 private:
  int n_, k_;
  std::vector<Subspace> nodes_;
  std::vector<double> weights_;
  double total_mass_;
  std::vector<double> perp_frames_;  // node-minor, see kernels::project
};

void validate_dims(int n, int k);

/// i.i.d. Haar-distributed planes with equal weights.
GrassmannQuadrature haar_sample(int n, int k, std::size_t count, std::uint64_t seed);

/// Lines in R^2 at equally spaced angles over [0, pi) with equal weights.
GrassmannQuadrature equiangular_lines(std::size_t count);

/// Uniformly random rotation of R^n.
Mat haar_rotation(int n, std::uint64_t seed);

/// `count` uniformly random unit vectors in R^n, column-wise.
Mat random_unit_vectors(int n, std::size_t count, std::uint64_t seed);

struct BisphericalSpec {
  int angle_nodes = 48;     // Gauss-Legendre nodes in the splitting angle
  int sphere_budget = 24;   // resolution of the factor spheres
  std::uint64_t seed = 0;   // used only when a factor sphere needs Monte Carlo
  std::size_t mc_count = 20000;
};

/// Integral over S^{n-1} through x = (cos b u, sin b v), u in S^{n-k-1},
/// v in S^{k-1}, b in [0, pi/2] with density sin^{k-1} b cos^{n-k-1} b.
double bispherical_integrate(const std::function<double(const Vec&)>& f, int n, int k,
                             const BisphericalSpec& spec = {});

}  // namespace kplane
