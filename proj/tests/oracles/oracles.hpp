#pragma once

// Reference values computed without the library's quadratures or transforms.

#include <cstdint>
#include <functional>
#include <vector>

#include "kplane/linalg.hpp"

namespace oracle {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Hermite rule for weight e^{-t^2} by Golub-Welsch.
Rule gauss_hermite(int m);
/// Gauss-Legendre rule on [a, b] by Golub-Welsch.
Rule gauss_legendre(int m, double a, double b);

/// int over y in span(plane_basis) of exp(-a |y + x0 - c|^2), tensor Gauss-Hermite.
double gaussian_plane_integral(double a, const kplane::Mat& plane_basis, const kplane::Vec& x0,
                               const kplane::Vec& c, int m = 40);

/// Dual transform of e^{-a|z|^2} at |x| = r for (n, k) = (2, 1) with total mass 2/pi:
/// (2/pi) e^{-a r^2 / 2} I_0(a r^2 / 2).
double dual_gaussian_2d(double a, double r);

/// Fourier transform int f(x) e^{-i x.xi} dx of a radial f(|x|) supported in
/// [0, radius], by a Hankel integral with a composite Gauss-Legendre rule.
double radial_fourier(int n, const std::function<double(double)>& profile, double radius, double rho);

/// The smooth bump profile e^{1 - 1/(1 - s^2)} on [0, 1).
double bump(double s);

/// Probability that a uniformly random k-dimensional subspace V has
/// |P_V e_1| <= s: the regularized incomplete beta I_{s^2}(k/2, (n-k)/2).
double cap_probability(int n, int k, double s);

/// min |Ax - b| over x >= 0 by enumerating active sets (small problems only).
kplane::Vec nnls_brute(const kplane::Mat& a, const kplane::Vec& b);

/// Surface area of the unit sphere in R^dim.
double sphere_area(int dim);

}  // namespace oracle
