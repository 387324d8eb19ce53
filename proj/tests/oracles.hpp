#pragma once

// Test-only reference computations. Nothing here calls the resultant or
// root-ratio code paths it is used to check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "mlspec/exact/rational.hpp"
#include "mlspec/exact/unipoly.hpp"
#include "mlspec/roots.hpp"
#include "mlspec/spectral.hpp"

namespace oracle {

using mlspec::Complex;
using mlspec::Rational;
using mlspec::UniPoly;

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 5) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int num_bound = 9, int den_bound = 5) {
  for (;;) {
    Rational q = random_rational(rng, num_bound, den_bound);
    if (sgn(q) != 0) return q;
  }
}

// Monic with nonzero constant term.
inline UniPoly<Rational> random_monic(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  c[0] = random_nonzero_rational(rng);
  for (int k = 1; k < degree; ++k) c[static_cast<size_t>(k)] = random_rational(rng);
  c[static_cast<size_t>(degree)] = 1;
  return UniPoly<Rational>(std::move(c), "x");
}

inline UniPoly<Rational> random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  for (int k = 0; k < degree; ++k) c[static_cast<size_t>(k)] = random_rational(rng);
  c[static_cast<size_t>(degree)] = random_nonzero_rational(rng);
  return UniPoly<Rational>(std::move(c), "x");
}

inline UniPoly<Rational> from_roots(const std::vector<Rational>& roots, const std::string& var = "x") {
  auto p = UniPoly<Rational>::constant(Rational(1), var);
  for (const auto& a : roots) p = p * UniPoly<Rational>::linear_root(a, var);
  return p;
}

// prod_{i,j} (alpha_i - beta_j) for monic polynomials given by their roots.
inline Rational double_product(const std::vector<Rational>& alpha, const std::vector<Rational>& beta) {
  Rational acc = 1;
  for (const auto& a : alpha) {
    for (const auto& b : beta) acc *= a - b;
  }
  return acc;
}

inline Complex complex_double_product(const std::vector<Complex>& alpha, const std::vector<Complex>& beta) {
  Complex acc = 1.0;
  for (const auto& a : alpha) {
    for (const auto& b : beta) acc *= a - b;
  }
  return acc;
}

// All alpha_i / alpha_j with i != j.
inline std::vector<Complex> pairwise_ratios(const std::vector<Complex>& roots) {
  std::vector<Complex> out;
  for (size_t i = 0; i < roots.size(); ++i) {
    for (size_t j = 0; j < roots.size(); ++j) {
      if (i != j) out.push_back(roots[i] / roots[j]);
    }
  }
  return out;
}

// Exact R_p by an independent route: the eigenvalues of C (x) C^-1, C the
// companion matrix of monic p, are all alpha_i / alpha_j including the n
// diagonal ratios equal to 1. Hence
//   charpoly(C (x) C^-1)(r) * prod_j alpha_j^(n-1) = (r - 1)^n R_p(r),
// with prod_j alpha_j = (-1)^n p(0).
inline UniPoly<Rational> kronecker_root_ratio_poly(const UniPoly<Rational>& monic) {
  using mlspec::SquareMatrix;
  const auto n = static_cast<size_t>(monic.degree());
  const SquareMatrix c = SquareMatrix::companion(monic);
  const SquareMatrix ci = c.inverse();
  SquareMatrix::Rows k(n * n, std::vector<Rational>(n * n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) k[i * n + a][j * n + b] = c(i, j) * ci(a, b);
      }
    }
  }
  const auto chi = mlspec::char_poly(SquareMatrix(std::move(k))).renamed("r");
  Rational prod_roots = monic.coefficient(0);
  if (n % 2 == 1) prod_roots = -prod_roots;
  Rational scale = 1;
  for (size_t i = 0; i + 1 < n; ++i) scale *= prod_roots;
  const auto r_minus_one = UniPoly<Rational>({Rational(-1), Rational(1)}, "r");
  return mlspec::exact_divide(UniPoly<Rational>::constant(scale, "r") * chi, r_minus_one.pow(static_cast<unsigned>(n)));
}

// Brute-force common-ratio test on numeric roots. Returns the smallest gap
// between a ratio of p and a ratio of q.
inline double min_ratio_gap(const std::vector<Complex>& p_roots, const std::vector<Complex>& q_roots) {
  const auto rp = pairwise_ratios(p_roots);
  const auto rq = pairwise_ratios(q_roots);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : rp) {
    for (const auto& b : rq) best = std::min(best, std::abs(a - b) / std::max(1.0, std::abs(a)));
  }
  return best;
}

inline mlspec::SquareMatrix random_integer_matrix(std::mt19937_64& rng, size_t n, int bound = 5) {
  std::uniform_int_distribution<int> d(-bound, bound);
  for (;;) {
    mlspec::SquareMatrix::Rows rows(n, std::vector<Rational>(n));
    for (auto& row : rows) {
      for (auto& x : row) x = d(rng);
    }
    mlspec::SquareMatrix m(std::move(rows));
    if (!m.is_singular()) return m;
  }
}

// Random well-conditioned invertible rational matrix (unit lower times unit
// upper triangular with small entries, then a permutation-free product).
inline mlspec::SquareMatrix random_unimodular(std::mt19937_64& rng, size_t n, int bound = 2) {
  std::uniform_int_distribution<int> d(-bound, bound);
  mlspec::SquareMatrix::Rows lo(n, std::vector<Rational>(n, Rational(0)));
  mlspec::SquareMatrix::Rows up(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    lo[i][i] = 1;
    up[i][i] = 1;
    for (size_t j = 0; j < i; ++j) {
      lo[i][j] = d(rng);
      up[j][i] = d(rng);
    }
  }
  return mlspec::SquareMatrix(std::move(lo)) * mlspec::SquareMatrix(std::move(up));
}

// Action of g = [[a, b], [c, d]] on binary quadratic forms in the monomial
// basis x^2, xy, y^2. For det g = 1 it preserves the discriminant form, of
// signature (2, 1), so it lands in a conjugate of SO(2, 1).
inline mlspec::SquareMatrix symmetric_square(const Rational& a, const Rational& b, const Rational& c,
                                             const Rational& d) {
  return mlspec::SquareMatrix({{a * a, a * b, b * b}, {2 * a * c, a * d + b * c, 2 * b * d}, {c * c, c * d, d * d}});
}

// Invariant form of symmetric_square: M^t Q M = Q.
inline mlspec::SquareMatrix discriminant_form() {
  return mlspec::SquareMatrix({{0, 0, -2}, {0, 1, 0}, {-2, 0, 0}});
}

// Hyperbolic element [[1, t], [t, 1 + t^2]] = [[1, 0], [t, 1]] [[1, t], [0, 1]] of SL(2, Z).
inline mlspec::SquareMatrix hyperbolic_so21(int t) {
  return symmetric_square(1, t, t, 1 + t * t);
}

}  // namespace oracle
