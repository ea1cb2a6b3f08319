// Compiled with -mavx2 -mfma; only entered after a runtime CPU check.

#include "kplane/kernels/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

#include <cmath>

namespace kplane::kernels {

namespace {

constexpr std::size_t kLanes = 4;

// exp: Cody-Waite reduction by ln2, then the (3,4) rational approximation of
// e^r on |r| <= ln2/2 used by Cephes. Inputs below -708.39 flush to zero.
inline __m256d exp_pd(__m256d x) {
  const __m256d lo_limit = _mm256_set1_pd(-708.39641853226408);
  const __m256d hi_limit = _mm256_set1_pd(709.782712893384);
  const __m256d underflow = _mm256_cmp_pd(x, lo_limit, _CMP_LT_OQ);
  x = _mm256_max_pd(_mm256_min_pd(x, hi_limit), lo_limit);

  const __m256d fx = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634073599)),
                                     _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(fx, _mm256_set1_pd(6.93145751953125E-1), x);
  x = _mm256_fnmadd_pd(fx, _mm256_set1_pd(1.42860682030941723212E-6), x);

  const __m256d xx = _mm256_mul_pd(x, x);
  __m256d p = _mm256_set1_pd(1.26177193074810590878E-4);
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(3.02994407707441961300E-2));
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(9.99999999999999999910E-1));
  p = _mm256_mul_pd(p, x);
  __m256d q = _mm256_set1_pd(3.00198505138664455042E-6);
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.52448340349684104192E-3));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.27265548208155028766E-1));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(2.00000000000000000009E0));
  __m256d e = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  e = _mm256_fmadd_pd(e, _mm256_set1_pd(2.0), _mm256_set1_pd(1.0));

  // 2^fx = 2^half * 2^rest, each built in the exponent field (fx may be 1024).
  const __m256d magic = _mm256_set1_pd(6755399441055744.0);  // 2^52 + 2^51
  const __m256d half = _mm256_floor_pd(_mm256_mul_pd(fx, _mm256_set1_pd(0.5)));
  const __m256d rest = _mm256_sub_pd(fx, half);
  const __m256i bias = _mm256_set1_epi64x(1023);
  __m256i b1 = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(half, magic)),
                                _mm256_castpd_si256(magic));
  __m256i b2 = _mm256_sub_epi64(_mm256_castpd_si256(_mm256_add_pd(rest, magic)),
                                _mm256_castpd_si256(magic));
  b1 = _mm256_slli_epi64(_mm256_add_epi64(b1, bias), 52);
  b2 = _mm256_slli_epi64(_mm256_add_epi64(b2, bias), 52);
  e = _mm256_mul_pd(_mm256_mul_pd(e, _mm256_castsi256_pd(b1)), _mm256_castsi256_pd(b2));
  return _mm256_andnot_pd(underflow, e);
}

// sin and cos after Cephes: reduction by pi/4 in three parts, octant
// selection done in floating point.
inline void sincos_pd(__m256d x, __m256d* s_out, __m256d* c_out) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  const __m256d sign_x = _mm256_and_pd(x, sign_mask);
  const __m256d ax = _mm256_andnot_pd(sign_mask, x);

  __m256d y = _mm256_floor_pd(_mm256_mul_pd(ax, _mm256_set1_pd(1.27323954473516268615)));
  // make the octant index even
  const __m256d half_y = _mm256_mul_pd(y, _mm256_set1_pd(0.5));
  const __m256d odd = _mm256_cmp_pd(_mm256_floor_pd(half_y), half_y, _CMP_NEQ_OQ);
  y = _mm256_add_pd(y, _mm256_and_pd(odd, _mm256_set1_pd(1.0)));
  // j = y mod 8, one of {0, 2, 4, 6}
  const __m256d j = _mm256_fnmadd_pd(
      _mm256_floor_pd(_mm256_mul_pd(y, _mm256_set1_pd(0.125))), _mm256_set1_pd(8.0), y);

  __m256d z = _mm256_fnmadd_pd(y, _mm256_set1_pd(7.85398125648498535156E-1), ax);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(3.77489470793079817668E-8), z);
  z = _mm256_fnmadd_pd(y, _mm256_set1_pd(2.69515142907905952645E-15), z);
  const __m256d zz = _mm256_mul_pd(z, z);

  __m256d ps = _mm256_set1_pd(1.58962301576546568060E-10);
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-2.50507477628578072866E-8));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(2.75573136213857245213E-6));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.98412698295895385996E-4));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(8.33333333332211858878E-3));
  ps = _mm256_fmadd_pd(ps, zz, _mm256_set1_pd(-1.66666666666666307295E-1));
  const __m256d poly_sin = _mm256_fmadd_pd(_mm256_mul_pd(z, zz), ps, z);

  __m256d pc = _mm256_set1_pd(-1.13585365213876817300E-11);
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.08757008419747316778E-9));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-2.75573141792967388112E-7));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(2.48015872888517045348E-5));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(-1.38888888888730564116E-3));
  pc = _mm256_fmadd_pd(pc, zz, _mm256_set1_pd(4.16666666666665929218E-2));
  __m256d poly_cos = _mm256_mul_pd(_mm256_mul_pd(zz, zz), pc);
  poly_cos = _mm256_add_pd(_mm256_fnmadd_pd(zz, _mm256_set1_pd(0.5), _mm256_set1_pd(1.0)), poly_cos);

  const __m256d upper = _mm256_cmp_pd(j, _mm256_set1_pd(3.0), _CMP_GT_OQ);       // j in {4, 6}
  const __m256d jr = _mm256_sub_pd(j, _mm256_and_pd(upper, _mm256_set1_pd(4.0)));  // {0, 2}
  const __m256d swap = _mm256_cmp_pd(jr, _mm256_set1_pd(1.0), _CMP_GT_OQ);          // jr == 2

  __m256d s = _mm256_blendv_pd(poly_sin, poly_cos, swap);
  s = _mm256_xor_pd(s, _mm256_and_pd(upper, sign_mask));
  s = _mm256_xor_pd(s, sign_x);

  __m256d c = _mm256_blendv_pd(poly_cos, poly_sin, swap);
  const __m256d cos_flip = _mm256_xor_pd(upper, swap);
  c = _mm256_xor_pd(c, _mm256_and_pd(cos_flip, sign_mask));

  *s_out = s;
  *c_out = c;
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline __m256d sq_dist_pd(const double* coords, std::size_t stride, std::size_t i, int dim,
                          const double* center) {
  __m256d sq = _mm256_setzero_pd();
  for (int d = 0; d < dim; ++d) {
    const __m256d t =
        _mm256_sub_pd(_mm256_loadu_pd(coords + d * stride + i), _mm256_set1_pd(center[d]));
    sq = _mm256_fmadd_pd(t, t, sq);
  }
  return sq;
}

void exp_avx2(const double* x, double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) _mm256_storeu_pd(y + i, exp_pd(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = std::exp(x[i]);
}

void sincos_avx2(const double* x, double* s, double* c, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256d sv, cv;
    sincos_pd(_mm256_loadu_pd(x + i), &sv, &cv);
    _mm256_storeu_pd(s + i, sv);
    _mm256_storeu_pd(c + i, cv);
  }
  for (; i < n; ++i) {
    s[i] = std::sin(x[i]);
    c[i] = std::cos(x[i]);
  }
}

void add_gaussian_avx2(const double* coords, std::size_t stride, std::size_t count, int dim,
                       const double* center, double a, double weight, double* out) {
  const __m256d neg_a = _mm256_set1_pd(-a);
  const __m256d w = _mm256_set1_pd(weight);
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d e = exp_pd(_mm256_mul_pd(neg_a, sq_dist_pd(coords, stride, i, dim, center)));
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(w, e, _mm256_loadu_pd(out + i)));
  }
  for (; i < count; ++i) {
    double sq = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double t = coords[d * stride + i] - center[d];
      sq += t * t;
    }
    out[i] += weight * std::exp(-a * sq);
  }
}

void add_bump_avx2(const double* coords, std::size_t stride, std::size_t count, int dim,
                   const double* center, double radius, double weight, double* out) {
  const double inv_r2 = 1.0 / (radius * radius);
  const __m256d inv = _mm256_set1_pd(inv_r2);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d w = _mm256_set1_pd(weight);
  std::size_t i = 0;
  for (; i + kLanes <= count; i += kLanes) {
    const __m256d s2 = _mm256_mul_pd(sq_dist_pd(coords, stride, i, dim, center), inv);
    const __m256d inside = _mm256_cmp_pd(s2, one, _CMP_LT_OQ);
    if (_mm256_movemask_pd(inside) == 0) continue;
    // outside lanes get a harmless argument and are masked afterwards
    const __m256d gap = _mm256_blendv_pd(one, _mm256_sub_pd(one, s2), inside);
    const __m256d e = exp_pd(_mm256_sub_pd(one, _mm256_div_pd(one, gap)));
    _mm256_storeu_pd(out + i,
                     _mm256_fmadd_pd(w, _mm256_and_pd(inside, e), _mm256_loadu_pd(out + i)));
  }
  for (; i < count; ++i) {
    double sq = 0.0;
    for (int d = 0; d < dim; ++d) {
      const double t = coords[d * stride + i] - center[d];
      sq += t * t;
    }
    const double s2 = sq * inv_r2;
    if (s2 < 1.0) out[i] += weight * std::exp(1.0 - 1.0 / (1.0 - s2));
  }
}

void phase_sums_avx2(const double* phase, const double* weight, std::size_t n, double* cos_sum,
                     double* sin_sum) {
  __m256d acc_c = _mm256_setzero_pd();
  __m256d acc_s = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    __m256d sv, cv;
    sincos_pd(_mm256_loadu_pd(phase + i), &sv, &cv);
    const __m256d w = _mm256_loadu_pd(weight + i);
    acc_c = _mm256_fmadd_pd(w, cv, acc_c);
    acc_s = _mm256_fmadd_pd(w, sv, acc_s);
  }
  double cs = hsum(acc_c), sn = hsum(acc_s);
  for (; i < n; ++i) {
    cs += weight[i] * std::cos(phase[i]);
    sn += weight[i] * std::sin(phase[i]);
  }
  *cos_sum = cs;
  *sin_sum = sn;
}

void project_avx2(const double* frames, std::size_t nodes, int rows, int dim, const double* x,
                  double* coords) {
  for (int r = 0; r < rows; ++r) {
    double* out = coords + r * nodes;
    std::size_t j = 0;
    for (; j + kLanes <= nodes; j += kLanes) {
      __m256d acc = _mm256_setzero_pd();
      for (int d = 0; d < dim; ++d) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(frames + (r * dim + d) * nodes + j),
                              _mm256_set1_pd(x[d]), acc);
      }
      _mm256_storeu_pd(out + j, acc);
    }
    for (; j < nodes; ++j) {
      double acc = 0.0;
      for (int d = 0; d < dim; ++d) acc += frames[(r * dim + d) * nodes + j] * x[d];
      out[j] = acc;
    }
  }
}

double dot_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

const Table* avx2_table() {
  static const Table table{exp_avx2,        sincos_avx2,  add_gaussian_avx2, add_bump_avx2,
                           phase_sums_avx2, project_avx2, dot_avx2};
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return supported ? &table : nullptr;
}

}  // namespace kplane::kernels

#else

namespace kplane::kernels {
const Table* avx2_table() { return nullptr; }
}  // namespace kplane::kernels

#endif
