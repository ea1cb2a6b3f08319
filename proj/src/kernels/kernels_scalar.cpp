#include <cmath>

#include "kplane/kernels/kernels.hpp"

namespace kplane::kernels {

namespace {

void exp_scalar(const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = std::exp(x[i]);
}

void sincos_scalar(const double* x, double* s, double* c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

double sq_dist(const double* coords, std::size_t stride, std::size_t i, int dim,
               const double* center) {
  double sq = 0.0;
  for (int d = 0; d < dim; ++d) {
    const double t = coords[d * stride + i] - center[d];
    sq += t * t;
  }
  return sq;
}

void add_gaussian_scalar(const double* coords, std::size_t stride, std::size_t count, int dim,
                         const double* center, double a, double weight, double* out) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] += weight * std::exp(-a * sq_dist(coords, stride, i, dim, center));
  }
}

void add_bump_scalar(const double* coords, std::size_t stride, std::size_t count, int dim,
                     const double* center, double radius, double weight, double* out) {
  const double inv_r2 = 1.0 / (radius * radius);
  for (std::size_t i = 0; i < count; ++i) {
    const double s2 = sq_dist(coords, stride, i, dim, center) * inv_r2;
    if (s2 < 1.0) out[i] += weight * std::exp(1.0 - 1.0 / (1.0 - s2));
  }
}

void phase_sums_scalar(const double* phase, const double* weight, std::size_t n,
                       double* cos_sum, double* sin_sum) {
  double cs = 0.0, sn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cs += weight[i] * std::cos(phase[i]);
    sn += weight[i] * std::sin(phase[i]);
  }
  *cos_sum = cs;
  *sin_sum = sn;
}

void project_scalar(const double* frames, std::size_t nodes, int rows, int dim, const double* x,
                    double* coords) {
  for (int r = 0; r < rows; ++r) {
    double* out = coords + r * nodes;
    for (std::size_t j = 0; j < nodes; ++j) out[j] = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double* f = frames + (r * dim + d) * nodes;
      const double xd = x[d];
      for (std::size_t j = 0; j < nodes; ++j) out[j] += f[j] * xd;
    }
  }
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

const Table& scalar_table() {
  static const Table table{exp_scalar,     sincos_scalar,     add_gaussian_scalar, add_bump_scalar,
                           phase_sums_scalar, project_scalar, dot_scalar};
  return table;
}

}  // namespace kplane::kernels
