#pragma once

// Non-negative least squares (Lawson-Hanson active set) and the least
// distance program min |x| subject to G x >= h built on it.

#include "kplane/linalg.hpp"

namespace kplane {

struct NnlsResult {
  Vec x;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// min |A x - b| subject to x >= 0.
NnlsResult nnls(const Mat& a, const Vec& b, int max_iterations = 0);

struct LdpResult {
  Vec x;
  bool feasible = false;
};

/// min |x| subject to G x >= h. Reports infeasibility instead of throwing.
LdpResult least_distance(const Mat& g, const Vec& h);

}  // namespace kplane
