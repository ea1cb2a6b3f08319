#include "kplane/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "kplane/error.hpp"
#include "kplane/kernels/kernels.hpp"

namespace kplane {

namespace {

constexpr double kFrameTol = 1e-12;

Mat gaussian_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat g(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) g(i, j) = normal(rng);
  }
  return g;
}

// Q factor of a Gaussian matrix with the signs of diag(R) made positive.
Mat haar_orthogonal(int n, std::mt19937_64& rng) {
  const Mat g = gaussian_matrix(n, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  const Mat& r = qr.matrixQR();
  for (int i = 0; i < n; ++i) {
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  return q;
}

quad::PointRule factor_sphere(int dim, const BisphericalSpec& spec, std::uint64_t salt) {
  if (dim <= 4) return quad::sphere_rule(dim, spec.sphere_budget);
  return quad::sphere_rule_mc(dim, spec.mc_count, spec.seed ^ salt);
}

}  // namespace

using quad::PointRule;

void validate_dims(int n, int k) {
  if (n < 2 || k <= 0 || k >= n) {
    throw ParameterError("invalid dimensions (n=" + std::to_string(n) + ", k=" +
                         std::to_string(k) + "): need 0 < k < n");
  }
}

Subspace::Subspace(Mat frame_h, Mat frame_perp)
    : frame_h_(std::move(frame_h)), frame_perp_(std::move(frame_perp)) {
  const Eigen::Index n = frame_h_.rows();
  if (frame_perp_.rows() != n) throw ParameterError("frames live in different dimensions");
  if (frame_h_.cols() + frame_perp_.cols() != n) {
    throw ParameterError("frames must together contain n vectors");
  }
  validate_dims(static_cast<int>(n), static_cast<int>(frame_perp_.cols()));
  Mat all(n, n);
  all << frame_h_, frame_perp_;
  const Mat gram = all.transpose() * all;
  if ((gram - Mat::Identity(n, n)).cwiseAbs().maxCoeff() > kFrameTol) {
    throw ParameterError("frames are not orthonormal within 1e-12");
  }
}

Subspace Subspace::from_span(const Mat& basis) {
  const Eigen::Index n = basis.rows(), m = basis.cols();
  validate_dims(static_cast<int>(n), static_cast<int>(n - m));
  Eigen::HouseholderQR<Mat> qr(basis);
  const Mat& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < m; ++i) {
    if (std::abs(r(i, i)) < 1e-12) throw ParameterError("spanning vectors are degenerate");
  }
  const Mat q = qr.householderQ();
  return Subspace(q.leftCols(m), q.rightCols(n - m));
}

Subspace Subspace::from_normals(const Mat& normals) {
  const Eigen::Index n = normals.rows(), k = normals.cols();
  validate_dims(static_cast<int>(n), static_cast<int>(k));
  const Subspace perp = from_span(normals);
  return Subspace(perp.frame_perp(), perp.frame_h());
}

Vec Subspace::project_complement(const Vec& x) const {
  if (x.size() != frame_h_.rows()) throw ParameterError("point dimension does not match plane");
  return frame_perp_.transpose() * x;
}

Vec Subspace::project_plane(const Vec& x) const {
  if (x.size() != frame_h_.rows()) throw ParameterError("point dimension does not match plane");
  return frame_h_.transpose() * x;
}

Vec Subspace::embed_perp(const Vec& z) const {
  if (z.size() != frame_perp_.cols()) throw ParameterError("offset dimension must equal k");
  return frame_perp_ * z;
}

Vec Subspace::embed_plane(const Vec& y) const {
  if (y.size() != frame_h_.cols()) throw ParameterError("plane coordinate dimension must equal n-k");
  return frame_h_ * y;
}

Mat Subspace::projector_perp() const { return frame_perp_ * frame_perp_.transpose(); }

bool Subspace::same_plane(const Subspace& other, double tol) const {
  if (n() != other.n() || k() != other.k()) return false;
  return (projector_perp() - other.projector_perp()).cwiseAbs().maxCoeff() <= tol;
}

double grassmann_mass(int n, int k) {
  validate_dims(n, k);
  return quad::sphere_area(k) * quad::sphere_area(n - k) / quad::sphere_area(n);
}

GrassmannQuadrature::GrassmannQuadrature(int n, int k, std::vector<Subspace> nodes,
                                         std::vector<double> weights)
    : n_(n), k_(k), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  validate_dims(n, k);
  if (nodes_.empty()) throw ParameterError("Grassmann quadrature needs at least one node");
  if (nodes_.size() != weights_.size()) throw ParameterError("node and weight counts differ");
  for (const auto& h : nodes_) {
    if (h.n() != n || h.k() != k) throw ParameterError("quadrature nodes have mixed (n, k)");
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw ParameterError("quadrature weights must be non-negative");
  }
  total_mass_ = 0.0;
  for (double w : weights_) total_mass_ += w;

  const std::size_t m = nodes_.size();
  perp_frames_.resize(static_cast<std::size_t>(k) * n * m);
  for (std::size_t j = 0; j < m; ++j) {
    const Mat& f = nodes_[j].frame_perp();
    for (int r = 0; r < k; ++r) {
      for (int d = 0; d < n; ++d) perp_frames_[(static_cast<std::size_t>(r) * n + d) * m + j] = f(d, r);
    }
  }
}

void GrassmannQuadrature::project_all(const Vec& x, std::vector<double>& coords) const {
  if (x.size() != n_) throw ParameterError("point dimension does not match quadrature");
  coords.resize(static_cast<std::size_t>(k_) * nodes_.size());
  kernels::project(perp_frames_.data(), nodes_.size(), k_, n_, x.data(), coords.data());
}

GrassmannQuadrature haar_sample(int n, int k, std::size_t count, std::uint64_t seed) {
  validate_dims(n, k);
  if (count == 0) throw ParameterError("Haar sample count must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Subspace> nodes;
  nodes.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const Mat q = haar_orthogonal(n, rng);
    nodes.emplace_back(q.leftCols(n - k), q.rightCols(k));
  }
  const double mass = grassmann_mass(n, k);
  std::vector<double> weights(count, mass / static_cast<double>(count));
  return GrassmannQuadrature(n, k, std::move(nodes), std::move(weights));
}

GrassmannQuadrature equiangular_lines(std::size_t count) {
  if (count == 0) throw ParameterError("line count must be positive");
  std::vector<Subspace> nodes;
  nodes.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    const double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
    Mat h(2, 1), perp(2, 1);
    h << std::cos(t), std::sin(t);
    perp << -std::sin(t), std::cos(t);
    nodes.emplace_back(h, perp);
  }
  std::vector<double> weights(count, grassmann_mass(2, 1) / static_cast<double>(count));
  return GrassmannQuadrature(2, 1, std::move(nodes), std::move(weights));
}

Mat haar_rotation(int n, std::uint64_t seed) {
  if (n < 1) throw ParameterError("dimension must be positive");
  std::mt19937_64 rng(seed);
  return haar_orthogonal(n, rng);
}

Mat random_unit_vectors(int n, std::size_t count, std::uint64_t seed) {
  if (n < 1) throw ParameterError("dimension must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Mat out(n, static_cast<Eigen::Index>(count));
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    double norm = 0.0;
    while (norm < 1e-12) {
      for (int i = 0; i < n; ++i) out(i, j) = normal(rng);
      norm = out.col(j).norm();
    }
    out.col(j) /= norm;
  }
  return out;
}

double bispherical_integrate(const std::function<double(const Vec&)>& f, int n, int k,
                             const BisphericalSpec& spec) {
  validate_dims(n, k);
  if (spec.angle_nodes < 1 || spec.sphere_budget < 1 || spec.mc_count == 0) {
    throw ParameterError("quadrature budget must be positive");
  }
  const int m = n - k;
  const quad::Rule1D beta = quad::gauss_legendre(spec.angle_nodes, 0.0, 0.5 * std::numbers::pi);
  const PointRule su = factor_sphere(m, spec, 0x51ULL);
  const PointRule sv = factor_sphere(k, spec, 0xa7ULL);
  double total = 0.0;
  Vec x(n);
  for (int i = 0; i < spec.angle_nodes; ++i) {
    const double b = beta.nodes[i];
    const double cb = std::cos(b), sb = std::sin(b);
    const double density = std::pow(sb, k - 1) * std::pow(cb, m - 1);
    double inner = 0.0;
    for (Eigen::Index a = 0; a < su.points.cols(); ++a) {
      x.head(m) = cb * su.points.col(a);
      double row = 0.0;
      for (Eigen::Index c = 0; c < sv.points.cols(); ++c) {
        x.tail(k) = sb * sv.points.col(c);
        row += sv.weights(c) * f(x);
      }
      inner += su.weights(a) * row;
    }
    total += beta.weights[i] * density * inner;
  }
  return total;
}

}  // namespace kplane
