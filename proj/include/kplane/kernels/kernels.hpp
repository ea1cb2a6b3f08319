#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant chosen at runtime.
// Point batches are stored dimension-major: coordinate d of point i lives at
// coords[d * stride + i].

#include <cstddef>

namespace kplane::kernels {

enum class Isa { scalar, avx2 };

struct Table {
  void (*exp)(const double* x, double* y, std::size_t n);
  void (*sincos)(const double* x, double* s, double* c, std::size_t n);
  void (*add_gaussian)(const double* coords, std::size_t stride, std::size_t count, int dim,
                       const double* center, double a, double weight, double* out);
  void (*add_bump)(const double* coords, std::size_t stride, std::size_t count, int dim,
                   const double* center, double radius, double weight, double* out);
  void (*phase_sums)(const double* phase, const double* weight, std::size_t n, double* cos_sum,
                     double* sin_sum);
  void (*project)(const double* frames, std::size_t nodes, int rows, int dim, const double* x,
                  double* coords);
  double (*dot)(const double* a, const double* b, std::size_t n);
};

const Table& scalar_table();
/// nullptr when the build or the CPU lacks AVX2+FMA.
const Table* avx2_table();

bool isa_available(Isa isa);
Isa best_isa();
Isa active_isa();
/// Throws ParameterError if the ISA is unavailable.
void select_isa(Isa isa);
const char* isa_name(Isa isa);

const Table& active();

// Convenience wrappers over active().

inline void exp(const double* x, double* y, std::size_t n) { active().exp(x, y, n); }

inline void sincos(const double* x, double* s, double* c, std::size_t n) {
  active().sincos(x, s, c, n);
}

/// out[i] += weight * exp(-a |p_i - center|^2)
inline void add_gaussian(const double* coords, std::size_t stride, std::size_t count, int dim,
                         const double* center, double a, double weight, double* out) {
  active().add_gaussian(coords, stride, count, dim, center, a, weight, out);
}

/// out[i] += weight * exp(1 - 1 / (1 - |p_i - center|^2 / radius^2)) inside the ball.
inline void add_bump(const double* coords, std::size_t stride, std::size_t count, int dim,
                     const double* center, double radius, double weight, double* out) {
  active().add_bump(coords, stride, count, dim, center, radius, weight, out);
}

/// cos_sum = sum w_i cos(t_i), sin_sum = sum w_i sin(t_i)
inline void phase_sums(const double* phase, const double* weight, std::size_t n, double* cos_sum,
                       double* sin_sum) {
  active().phase_sums(phase, weight, n, cos_sum, sin_sum);
}

/// frames holds `rows` frame vectors of length `dim` for each node, laid out
/// node-minor: entry (r, d) of node j is frames[(r * dim + d) * nodes + j].
/// coords[r * nodes + j] = <frame_r(j), x>.
inline void project(const double* frames, std::size_t nodes, int rows, int dim, const double* x,
                    double* coords) {
  active().project(frames, nodes, rows, dim, x, coords);
}

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }

}  // namespace kplane::kernels
