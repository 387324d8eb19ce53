#pragma once

#include <utility>
#include <vector>

#include "mlspec/error.hpp"
#include "mlspec/exact/unipoly.hpp"

namespace mlspec {

template <class R>
using DenseMatrix = std::vector<std::vector<R>>;

// Fraction-free (Bareiss) determinant. Every division is exact in the
// coefficient ring, so integral inputs never leave the ring and symbolic
// entries stay polynomial.
template <class R>
R bareiss_determinant(DenseMatrix<R> m) {
  const size_t n = m.size();
  if (n == 0) return R(1);
  bool negate = false;
  R previous(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && is_zero(m[pivot][k])) ++pivot;
    if (pivot == n) return R(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = divexact(R(m[i][j] * m[k][k] - m[i][k] * m[k][j]), previous);
      }
      m[i][k] = R(0);
    }
    previous = m[k][k];
  }
  R det = m[n - 1][n - 1];
  return negate ? R(-det) : det;
}

// Rows: deg(b) shifted copies of a's coefficients (descending), followed by
// deg(a) shifted copies of b's.
template <class R>
DenseMatrix<R> sylvester_matrix(const UniPoly<R>& a, const UniPoly<R>& b) {
  const auto m = static_cast<size_t>(a.degree());
  const auto n = static_cast<size_t>(b.degree());
  const size_t size = m + n;
  DenseMatrix<R> s(size, std::vector<R>(size, R(0)));
  for (size_t row = 0; row < n; ++row) {
    for (size_t k = 0; k <= m; ++k) s[row][row + k] = a.coefficient(m - k);
  }
  for (size_t row = 0; row < m; ++row) {
    for (size_t k = 0; k <= n; ++k) s[n + row][row + k] = b.coefficient(n - k);
  }
  return s;
}

// Res(a, b) = a0^deg(b) * b0^deg(a) * prod (alpha_i - beta_j), computed as the
// Sylvester determinant. Constant (nonzero) arguments are accepted and give
// the usual power of the constant.
template <class R>
R sylvester_resultant(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of the zero polynomial");
  if (a.degree() > 0 && b.degree() > 0 && a.variable() != b.variable()) {
    throw Error(ErrorCode::VariableCollision,
                "resultant in different variables '" + a.variable() + "' and '" + b.variable() + "'");
  }
  return bareiss_determinant(sylvester_matrix(a, b));
}

}  // namespace mlspec
