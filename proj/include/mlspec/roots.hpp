#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mlspec/exact/rational.hpp"
#include "mlspec/exact/unipoly.hpp"

namespace mlspec {

using Complex = std::complex<double>;

inline constexpr double kDefaultRootTolerance = 1e-12;
inline constexpr int kMaxAberthSweeps = 1000;

// All complex roots of a polynomial (coefficients ascending) by Aberth-Ehrlich
// simultaneous iteration in extended precision. Each root is accepted once its
// relative backward error |p(z)| / sum |a_k| |z|^k drops below `tol`.
// Roots within 1e2 * tol (relative) of each other are merged into a cluster
// and reported repeatedly at the cluster mean.
// Throws NonConvergence after kMaxAberthSweeps sweeps.
std::vector<Complex> polynomial_roots(std::span<const long double> ascending, double tol = kDefaultRootTolerance);
// Exact coefficients: the polynomial is first split into square-free factors,
// so repeated roots come back with their exact multiplicity and full accuracy.
std::vector<Complex> polynomial_roots(const UniPoly<Rational>& p, double tol = kDefaultRootTolerance);

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

// Groups a root list (as returned above) into distinct values with counts.
std::vector<RootCluster> cluster_roots(const std::vector<Complex>& roots, double radius);

// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace mlspec
