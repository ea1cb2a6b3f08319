#include "kplane/nnls.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "kplane/error.hpp"

namespace kplane {

namespace {

// Least-squares solution on the columns listed in `active`.
Vec solve_active(const Mat& a, const Vec& b, const std::vector<Eigen::Index>& active) {
  Mat sub(a.rows(), static_cast<Eigen::Index>(active.size()));
  for (std::size_t i = 0; i < active.size(); ++i) sub.col(static_cast<Eigen::Index>(i)) = a.col(active[i]);
  return sub.colPivHouseholderQr().solve(b);
}

}  // namespace

NnlsResult nnls(const Mat& a, const Vec& b, int max_iterations) {
  if (a.rows() != b.size()) throw ParameterError("NNLS: row count of A must match b");
  const Eigen::Index n = a.cols();
  if (max_iterations <= 0) max_iterations = static_cast<int>(3 * n + 30);
  const double tol = 10.0 * std::numeric_limits<double>::epsilon() *
                     std::max<double>(1.0, a.cwiseAbs().maxCoeff()) *
                     static_cast<double>(std::max(a.rows(), n));

  NnlsResult res;
  res.x = Vec::Zero(n);
  std::vector<bool> in_active(static_cast<std::size_t>(n), false);
  std::vector<Eigen::Index> active;
  Vec w = a.transpose() * (b - a * res.x);

  while (res.iterations < max_iterations) {
    Eigen::Index t = -1;
    double best = tol;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!in_active[j] && w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) {
      res.converged = true;
      break;
    }
    in_active[t] = true;
    active.push_back(t);

    while (true) {
      ++res.iterations;
      const Vec s = solve_active(a, b, active);
      bool all_positive = true;
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) <= 0.0) all_positive = false;
      }
      if (all_positive) {
        for (std::size_t i = 0; i < active.size(); ++i) res.x(active[i]) = s(static_cast<Eigen::Index>(i));
        break;
      }
      double alpha = 1.0;
      for (std::size_t i = 0; i < active.size(); ++i) {
        const double si = s(static_cast<Eigen::Index>(i));
        if (si <= 0.0) {
          const double xi = res.x(active[i]);
          alpha = std::min(alpha, xi / (xi - si));
        }
      }
      for (std::size_t i = 0; i < active.size(); ++i) {
        const double xi = res.x(active[i]);
        res.x(active[i]) = xi + alpha * (s(static_cast<Eigen::Index>(i)) - xi);
      }
      std::vector<Eigen::Index> kept;
      for (Eigen::Index j : active) {
        if (res.x(j) <= tol) {
          res.x(j) = 0.0;
          in_active[j] = false;
        } else {
          kept.push_back(j);
        }
      }
      active.swap(kept);
      if (active.empty() || res.iterations >= max_iterations) break;
    }
    w = a.transpose() * (b - a * res.x);
  }
  res.residual_norm = (a * res.x - b).norm();
  return res;
}

LdpResult least_distance(const Mat& g, const Vec& h) {
  if (g.rows() != h.size()) throw ParameterError("LDP: row count of G must match h");
  const Eigen::Index m = g.rows(), n = g.cols();
  LdpResult out;
  out.x = Vec::Zero(n);
  if (m == 0) {
    out.feasible = true;
    return out;
  }
  Mat e(n + 1, m);
  e.topRows(n) = g.transpose();
  e.row(n) = h.transpose();
  Vec f = Vec::Zero(n + 1);
  f(n) = 1.0;
  const NnlsResult sol = nnls(e, f);
  const Vec r = e * sol.x - f;
  if (r.norm() < 1e-12 || std::abs(r(n)) < 1e-14) return out;
  out.x = -r.head(n) / r(n);
  out.feasible = true;
  return out;
}

}  // namespace kplane
