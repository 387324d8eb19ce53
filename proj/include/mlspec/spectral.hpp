#pragma once

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlspec/exact/rational.hpp"
#include "mlspec/exact/unipoly.hpp"
#include "mlspec/roots.hpp"

namespace mlspec {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultProximalTolerance = 1e-9;
inline constexpr double kScalarTolerance = 1e-12;

// Square matrix with exact rational entries. Immutable; the characteristic
// polynomial and the numeric eigenvalues are computed lazily, exactly once,
// and shared between copies.
class SquareMatrix {
 public:
  using Rows = std::vector<std::vector<Rational>>;

  explicit SquareMatrix(Rows rows);

  static SquareMatrix identity(size_t n);
  static SquareMatrix diagonal(const std::vector<Rational>& entries);
  // Companion matrix of a monic polynomial; its characteristic polynomial is p.
  static SquareMatrix companion(const UniPoly<Rational>& p);

  size_t dim() const { return rows_.size(); }
  const Rational& operator()(size_t i, size_t j) const { return rows_[i][j]; }
  const Rows& rows() const { return rows_; }

  Rational determinant() const;
  bool is_singular() const { return sgn(determinant()) == 0; }
  bool is_scalar() const;

  SquareMatrix transpose() const;
  // Throws SingularMatrix.
  SquareMatrix inverse() const;
  // Negative exponents use the inverse.
  SquareMatrix power(int k) const;

  RealMatrix to_real() const;

  // Monic det(xI - M) in the variable "x".
  const UniPoly<Rational>& char_poly() const;
  // Roots of char_poly() at kDefaultRootTolerance.
  const std::vector<Complex>& eigenvalues() const;

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const Rational& k, const SquareMatrix& m);
  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) { return a.rows_ == b.rows_; }

 private:
  struct Cache;

  Rows rows_;
  std::shared_ptr<Cache> cache_;
};

// Faddeev-LeVerrier recurrence over the rationals.
UniPoly<Rational> char_poly(const SquareMatrix& m);

// Numeric eigenvalues with multiplicity (roots of the exact characteristic
// polynomial). Throws NonConvergence.
std::vector<Complex> eigenvalues(const SquareMatrix& m, double tol = kDefaultRootTolerance);
// Floating matrices: characteristic polynomial by the same recurrence in
// extended precision, then the same root finder.
std::vector<Complex> eigenvalues(const RealMatrix& m, double tol = kDefaultRootTolerance);

// All lambda_i / lambda_j with i != j, row-major in (i, j). Throws SingularMatrix.
std::vector<Complex> eigen_ratios(const SquareMatrix& m);

enum class Proximality { Proximal, SemiProximalOnly, NotSemiProximal, Identity };

std::string_view to_string(Proximality p);

struct ProximalityClass {
  Proximality tag = Proximality::NotSemiProximal;
  // Largest-modulus eigenvalue when M is semi-proximal.
  std::optional<double> lambda_plus;
  // Smallest-modulus eigenvalue when M^-1 is semi-proximal.
  std::optional<double> lambda_minus;
  // Smallest relative modulus gap (|l1| - |l2|) / |l1| examined at either end.
  double gap = 0.0;
  std::string reason;
};

// Semi-proximal: a unique largest-modulus eigenvalue, simple and real
// (|Im| < tol |lambda|). Proximal: M and M^-1 both semi-proximal and the
// extreme eigenvalues share a sign. A real top eigenvalue whose relative
// modulus gap to the next one is <= tol cannot be decided numerically and
// throws DegenerateGap. A non-real top eigenvalue is never semi-proximal: its
// conjugate has the same modulus.
// Throws SingularMatrix.
ProximalityClass classify_proximal(const SquareMatrix& m, double tol = kDefaultProximalTolerance);

// Floating variant. The caller supplies M^-1 so that the bottom end is read
// from the dominant eigenvalue of the inverse; for long products of group
// elements the inverse word is far more accurate than a numeric inversion.
ProximalityClass classify_proximal(const RealMatrix& m, const RealMatrix& m_inverse,
                                   double tol = kDefaultProximalTolerance);

// log(lambda_+ / lambda_-) for proximal M, 0 for scalar matrices.
// Throws NotProximal, DegenerateGap, SingularMatrix.
double hilbert_translation_length(const SquareMatrix& m, double tol = kDefaultProximalTolerance);
double hilbert_translation_length(const RealMatrix& m, const RealMatrix& m_inverse,
                                  double tol = kDefaultProximalTolerance);
double translation_length(const ProximalityClass& c);

// d(M) = (M^t)^-1. Throws SingularMatrix.
SquareMatrix duality_map(const SquareMatrix& m);
RealMatrix duality_map(const RealMatrix& m);

// M / |det M|^(1/dim). Throws SingularMatrix.
RealMatrix normalize_det(const SquareMatrix& m);

// Exact: C_{P,Q} == 0 for the characteristic polynomials P, Q.
// Throws SingularMatrix, DegreeTooSmall.
bool common_eigenvalue_ratio(const SquareMatrix& m, const SquareMatrix& n);

// Both scalar, or both proximal with |l(M) - l(N)| < tol. Non-proximal input
// gives false; an undecidable gap still throws DegenerateGap.
bool same_length_pair(const SquareMatrix& m, const SquareMatrix& n, double tol = 1e-9);

bool is_scalar(const RealMatrix& m, double tol = kScalarTolerance);

}  // namespace mlspec
