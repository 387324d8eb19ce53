#include "mlspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "mlspec/error.hpp"
#include "mlspec/exact/resultant.hpp"
#include "mlspec/rootratio.hpp"

namespace mlspec {

struct SquareMatrix::Cache {
  std::once_flag poly_once;
  std::once_flag eig_once;
  UniPoly<Rational> poly;
  std::vector<Complex> eig;
};

namespace {

using LMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

std::vector<long double> numeric_char_poly(const LMatrix& a) {
  const auto n = static_cast<size_t>(a.rows());
  std::vector<long double> c(n + 1, 0.0L);
  c[n] = 1.0L;
  LMatrix m = LMatrix::Identity(a.rows(), a.cols());
  for (size_t k = 1; k <= n; ++k) {
    const LMatrix am = a * m;
    c[n - k] = -am.trace() / static_cast<long double>(k);
    m = am;
    m.diagonal().array() += c[n - k];
  }
  return c;
}

struct EndReading {
  bool semi = false;
  double lambda = 0.0;
  double gap = 0.0;
  std::string reason;
};

// Inspect the largest-modulus end of a spectrum.
EndReading read_top(std::vector<Complex> eig, double tol, const char* which) {
  std::stable_sort(eig.begin(), eig.end(), [](const Complex& x, const Complex& y) { return std::abs(x) > std::abs(y); });
  EndReading r;
  const double m1 = std::abs(eig[0]);
  const double m2 = eig.size() > 1 ? std::abs(eig[1]) : 0.0;
  r.gap = m1 > 0.0 ? (m1 - m2) / m1 : 0.0;
  if (std::abs(eig[0].imag()) >= tol * m1) {
    r.reason = std::string("top eigenvalue of ") + which + " is a non-real pair of modulus " + fmt(m1);
    return r;
  }
  if (r.gap <= tol) {
    throw Error(ErrorCode::DegenerateGap, std::string("top moduli of ") + which + " agree to relative gap " +
                                              fmt(r.gap) + " <= tolerance " + fmt(tol));
  }
  r.semi = true;
  r.lambda = eig[0].real();
  return r;
}

ProximalityClass classify_spectra(const std::vector<Complex>& top, const std::vector<Complex>& bottom, double tol) {
  ProximalityClass out;
  const EndReading hi = read_top(top, tol, "M");
  out.gap = hi.gap;
  if (!hi.semi) {
    out.tag = Proximality::NotSemiProximal;
    out.reason = hi.reason;
    return out;
  }
  out.lambda_plus = hi.lambda;
  const EndReading lo = read_top(bottom, tol, "M^-1");
  out.gap = std::min(out.gap, lo.gap);
  if (!lo.semi) {
    out.tag = Proximality::SemiProximalOnly;
    out.reason = lo.reason;
    return out;
  }
  out.lambda_minus = 1.0 / lo.lambda;
  if ((hi.lambda > 0.0) != (lo.lambda > 0.0)) {
    out.tag = Proximality::SemiProximalOnly;
    out.reason = "largest-modulus eigenvalue " + fmt(hi.lambda) + " and smallest-modulus eigenvalue " +
                 fmt(*out.lambda_minus) + " differ in sign";
    return out;
  }
  out.tag = Proximality::Proximal;
  out.reason = "unique simple real eigenvalues of largest and smallest modulus with equal sign";
  return out;
}

ProximalityClass scalar_class(double k) {
  ProximalityClass out;
  out.tag = Proximality::Identity;
  out.lambda_plus = k;
  out.lambda_minus = k;
  out.reason = "scalar multiple of the identity";
  return out;
}

}  // namespace

SquareMatrix::SquareMatrix(Rows rows) : rows_(std::move(rows)), cache_(std::make_shared<Cache>()) {
  if (rows_.empty()) throw Error(ErrorCode::DimensionMismatch, "matrix must have dimension >= 1");
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  }
}

SquareMatrix SquareMatrix::identity(size_t n) {
  Rows rows(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
  return SquareMatrix(std::move(rows));
}

SquareMatrix SquareMatrix::diagonal(const std::vector<Rational>& entries) {
  Rows rows(entries.size(), std::vector<Rational>(entries.size(), Rational(0)));
  for (size_t i = 0; i < entries.size(); ++i) rows[i][i] = entries[i];
  return SquareMatrix(std::move(rows));
}

SquareMatrix SquareMatrix::companion(const UniPoly<Rational>& p) {
  if (p.degree() < 1 || p.leading() != 1) {
    throw Error(ErrorCode::NonMonic, "companion matrix needs a monic polynomial of degree >= 1");
  }
  const auto n = static_cast<size_t>(p.degree());
  Rows rows(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 1; i < n; ++i) rows[i][i - 1] = 1;
  for (size_t i = 0; i < n; ++i) rows[i][n - 1] = -p.coefficient(i);
  return SquareMatrix(std::move(rows));
}

Rational SquareMatrix::determinant() const { return bareiss_determinant(rows_); }

bool SquareMatrix::is_scalar() const {
  for (size_t i = 0; i < dim(); ++i) {
    for (size_t j = 0; j < dim(); ++j) {
      if (i == j ? rows_[i][i] != rows_[0][0] : sgn(rows_[i][j]) != 0) return false;
    }
  }
  return true;
}

SquareMatrix SquareMatrix::transpose() const {
  Rows t(dim(), std::vector<Rational>(dim()));
  for (size_t i = 0; i < dim(); ++i) {
    for (size_t j = 0; j < dim(); ++j) t[j][i] = rows_[i][j];
  }
  return SquareMatrix(std::move(t));
}

SquareMatrix SquareMatrix::inverse() const {
  const size_t n = dim();
  Rows a = rows_;
  Rows inv = identity(n).rows_;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && sgn(a[pivot][col]) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a[i][col]) == 0) continue;
      const Rational f = a[i][col];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return SquareMatrix(std::move(inv));
}

SquareMatrix SquareMatrix::power(int k) const {
  SquareMatrix base = k < 0 ? inverse() : *this;
  unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
  SquareMatrix result = identity(dim());
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

RealMatrix SquareMatrix::to_real() const {
  RealMatrix m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i) {
    for (size_t j = 0; j < dim(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(rows_[i][j]);
  }
  return m;
}

const UniPoly<Rational>& SquareMatrix::char_poly() const {
  std::call_once(cache_->poly_once, [this] { cache_->poly = mlspec::char_poly(*this); });
  return cache_->poly;
}

const std::vector<Complex>& SquareMatrix::eigenvalues() const {
  std::call_once(cache_->eig_once, [this] { cache_->eig = polynomial_roots(char_poly()); });
  return cache_->eig;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix product of different dimensions");
  const size_t n = a.dim();
  SquareMatrix::Rows out(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      if (sgn(a.rows_[i][k]) == 0) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] += a.rows_[i][k] * b.rows_[k][j];
    }
  }
  return SquareMatrix(std::move(out));
}

SquareMatrix operator*(const Rational& k, const SquareMatrix& m) {
  SquareMatrix::Rows out = m.rows_;
  for (auto& row : out) {
    for (auto& x : row) x *= k;
  }
  return SquareMatrix(std::move(out));
}

UniPoly<Rational> char_poly(const SquareMatrix& a) {
  const size_t n = a.dim();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  SquareMatrix m = SquareMatrix::identity(n);
  for (size_t k = 1; k <= n; ++k) {
    const SquareMatrix am = a * m;
    Rational trace = 0;
    for (size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long>(k);
    SquareMatrix::Rows next = am.rows();
    for (size_t i = 0; i < n; ++i) next[i][i] += c[n - k];
    m = SquareMatrix(std::move(next));
  }
  return UniPoly<Rational>(std::move(c), "x");
}

std::vector<Complex> eigenvalues(const SquareMatrix& m, double tol) {
  if (tol == kDefaultRootTolerance) return m.eigenvalues();
  return polynomial_roots(m.char_poly(), tol);
}

std::vector<Complex> eigenvalues(const RealMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  const auto c = numeric_char_poly(m.cast<long double>());
  return polynomial_roots(std::span<const long double>(c), tol);
}

std::vector<Complex> eigen_ratios(const SquareMatrix& m) {
  if (m.is_singular()) throw Error(ErrorCode::SingularMatrix, "eigenvalue ratios of a singular matrix");
  const auto& eig = m.eigenvalues();
  std::vector<Complex> out;
  out.reserve(eig.size() * (eig.size() - 1));
  for (size_t i = 0; i < eig.size(); ++i) {
    for (size_t j = 0; j < eig.size(); ++j) {
      if (i != j) out.push_back(eig[i] / eig[j]);
    }
  }
  return out;
}

std::string_view to_string(Proximality p) {
  switch (p) {
    case Proximality::Proximal: return "proximal";
    case Proximality::SemiProximalOnly: return "semi-proximal-only";
    case Proximality::NotSemiProximal: return "not-semi-proximal";
    case Proximality::Identity: return "identity";
  }
  return "unknown";
}

ProximalityClass classify_proximal(const SquareMatrix& m, double tol) {
  if (m.is_singular()) throw Error(ErrorCode::SingularMatrix, "proximality of a singular matrix");
  if (m.is_scalar()) return scalar_class(to_double(m(0, 0)));
  const auto& eig = m.eigenvalues();
  std::vector<Complex> inv;
  inv.reserve(eig.size());
  for (const Complex& z : eig) inv.push_back(1.0 / z);
  return classify_spectra(eig, inv, tol);
}

ProximalityClass classify_proximal(const RealMatrix& m, const RealMatrix& m_inverse, double tol) {
  if (m.rows() != m_inverse.rows() || m.cols() != m_inverse.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matrix and inverse differ in shape");
  }
  if (is_scalar(m)) return scalar_class(m(0, 0));
  return classify_spectra(eigenvalues(m), eigenvalues(m_inverse), tol);
}

double translation_length(const ProximalityClass& c) {
  if (c.tag == Proximality::Identity) return 0.0;
  if (c.tag != Proximality::Proximal) {
    throw Error(ErrorCode::NotProximal, std::string(to_string(c.tag)) + ": " + c.reason);
  }
  // lambda_+ / lambda_- as a sum of logs: lambda_- came from inverting the top
  // eigenvalue of M^-1, and the two share a sign.
  return std::log(std::abs(*c.lambda_plus)) - std::log(std::abs(*c.lambda_minus));
}

double hilbert_translation_length(const SquareMatrix& m, double tol) {
  return translation_length(classify_proximal(m, tol));
}

double hilbert_translation_length(const RealMatrix& m, const RealMatrix& m_inverse, double tol) {
  return translation_length(classify_proximal(m, m_inverse, tol));
}

SquareMatrix duality_map(const SquareMatrix& m) { return m.transpose().inverse(); }

RealMatrix duality_map(const RealMatrix& m) {
  Eigen::FullPivLU<RealMatrix> lu(m);
  if (!lu.isInvertible()) throw Error(ErrorCode::SingularMatrix, "duality map of a singular matrix");
  return lu.inverse().transpose();
}

RealMatrix normalize_det(const SquareMatrix& m) {
  const Rational det = m.determinant();
  if (sgn(det) == 0) throw Error(ErrorCode::SingularMatrix, "cannot normalize a singular matrix");
  const long double scale =
      std::pow(std::abs(to_long_double(det)), 1.0L / static_cast<long double>(m.dim()));
  return (m.to_real().cast<long double>() / scale).cast<double>();
}

bool common_eigenvalue_ratio(const SquareMatrix& m, const SquareMatrix& n) {
  if (m.is_singular() || n.is_singular()) throw Error(ErrorCode::SingularMatrix, "common ratio of a singular matrix");
  return has_common_root_ratio(m.char_poly(), n.char_poly());
}

bool same_length_pair(const SquareMatrix& m, const SquareMatrix& n, double tol) {
  const bool ms = m.is_scalar();
  const bool ns = n.is_scalar();
  if (ms || ns) return ms && ns;
  const auto cm = classify_proximal(m);
  if (cm.tag != Proximality::Proximal) return false;
  const auto cn = classify_proximal(n);
  if (cn.tag != Proximality::Proximal) return false;
  return std::abs(translation_length(cm) - translation_length(cn)) < tol;
}

bool is_scalar(const RealMatrix& m, double tol) {
  const double k = m(0, 0);
  const double scale = std::max(1.0, std::abs(k));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double target = i == j ? k : 0.0;
      if (std::abs(m(i, j) - target) > tol * scale) return false;
    }
  }
  return true;
}

}  // namespace mlspec
