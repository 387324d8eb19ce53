#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mlspec/error.hpp"
#include "mlspec/exact/mpoly.hpp"
#include "mlspec/exact/rational.hpp"

namespace mlspec {

// Does a coefficient mention the named variable? Used to reject a main
// variable that also appears inside the coefficient ring.
inline bool mentions(const Rational&, const std::string&) { return false; }
inline bool mentions(const MPoly& c, const std::string& var) { return c.contains(var); }

// Dense univariate polynomial over a commutative ring R (Rational or MPoly).
// Coefficients are stored ascending by degree with no trailing zeros.
template <class R>
class UniPoly {
 public:
  UniPoly() : var_("x") {}

  explicit UniPoly(std::vector<R> ascending, std::string var = "x")
      : var_(std::move(var)), coeffs_(std::move(ascending)) {
    trim();
    for (const R& c : coeffs_) {
      if (mentions(c, var_)) {
        throw Error(ErrorCode::VariableCollision, "variable '" + var_ + "' also occurs in a coefficient");
      }
    }
  }

  static UniPoly constant(const R& c, std::string var = "x") { return UniPoly(std::vector<R>{c}, std::move(var)); }

  static UniPoly monomial(const R& c, size_t k, std::string var = "x") {
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return UniPoly(std::move(v), std::move(var));
  }

  // x - root
  static UniPoly linear_root(const R& root, std::string var = "x") {
    return UniPoly(std::vector<R>{R(-root), R(1)}, std::move(var));
  }

  const std::string& variable() const { return var_; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  R coefficient(size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R(0); }
  R leading() const { return coeffs_.empty() ? R(0) : coeffs_.back(); }

  R evaluate(const R& x) const {
    R acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = R(acc * x + *it);
    return acc;
  }

  // p(c*x). With an MPoly coefficient ring and c a fresh variable this is the
  // bivariate substitution x -> r*x; c must not be the main variable.
  UniPoly scale_argument(const R& c) const {
    if (mentions(c, var_)) {
      throw Error(ErrorCode::VariableCollision, "scaling factor mentions the main variable '" + var_ + "'");
    }
    std::vector<R> out;
    out.reserve(coeffs_.size());
    R power(1);
    for (const R& a : coeffs_) {
      out.push_back(R(a * power));
      power = R(power * c);
    }
    return UniPoly(std::move(out), var_);
  }

  UniPoly renamed(std::string var) const { return UniPoly(coeffs_, std::move(var)); }

  UniPoly pow(unsigned k) const {
    UniPoly result = constant(R(1), var_);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
  }

  UniPoly operator-() const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const R& c : coeffs_) out.push_back(R(-c));
    return UniPoly(std::move(out), var_);
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), R(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] = R(out[i] + b.coeffs_[i]);
    return UniPoly(std::move(out), common_variable(a, b));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    const std::string var = common_variable(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly({}, var);
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, R(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (mlspec::is_zero(a.coeffs_[i])) continue;
      for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = R(out[i + j] + a.coeffs_[i] * b.coeffs_[j]);
    }
    return UniPoly(std::move(out), var);
  }

  friend UniPoly operator*(const R& c, const UniPoly& p) { return constant(c, p.var_) * p; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.var_ == b.var_ || a.degree() < 1);
  }

 private:
  static std::string common_variable(const UniPoly& a, const UniPoly& b) {
    if (a.var_ == b.var_ || b.degree() < 1) return a.var_;
    if (a.degree() < 1) return b.var_;
    throw Error(ErrorCode::VariableCollision,
                "cannot combine polynomials in different variables '" + a.var_ + "' and '" + b.var_ + "'");
  }

  void trim() {
    while (!coeffs_.empty() && mlspec::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::string var_;
  std::vector<R> coeffs_;
};

// Quotient f / g; throws InexactDivision on a nonzero remainder.
template <class R>
UniPoly<R> exact_divide(const UniPoly<R>& f, const UniPoly<R>& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (f.variable() != g.variable() && f.degree() > 0 && g.degree() > 0) {
    throw Error(ErrorCode::VariableCollision, "exact_divide across different variables");
  }
  const std::string var = g.degree() > 0 ? g.variable() : f.variable();
  std::vector<R> rem = f.coefficients();
  const auto& div = g.coefficients();
  const int dg = g.degree();
  if (f.degree() < dg) {
    if (!f.is_zero()) throw Error(ErrorCode::InexactDivision, "divisor degree exceeds dividend degree");
    return UniPoly<R>({}, var);
  }
  std::vector<R> quot(static_cast<size_t>(f.degree() - dg + 1), R(0));
  for (int k = f.degree(); k >= dg; --k) {
    const R& top = rem[static_cast<size_t>(k)];
    if (is_zero(top)) continue;
    const R t = divexact(top, div.back());
    const auto shift = static_cast<size_t>(k - dg);
    quot[shift] = t;
    for (size_t j = 0; j < div.size(); ++j) rem[shift + j] = R(rem[shift + j] - t * div[j]);
  }
  for (const R& c : rem) {
    if (!is_zero(c)) throw Error(ErrorCode::InexactDivision, "nonzero remainder in exact_divide");
  }
  return UniPoly<R>(std::move(quot), var);
}

template <class R>
UniPoly<R> derivative(const UniPoly<R>& p) {
  std::vector<R> out;
  for (size_t k = 1; k < p.coefficients().size(); ++k) out.push_back(R(p.coefficients()[k] * static_cast<long>(k)));
  return UniPoly<R>(std::move(out), p.variable());
}

// Field-coefficient helpers (rational coefficients only).

struct DivisionResult {
  UniPoly<Rational> quotient;
  UniPoly<Rational> remainder;
};

DivisionResult divide_with_remainder(const UniPoly<Rational>& f, const UniPoly<Rational>& g);

// Monic greatest common divisor; gcd(0, 0) = 0.
UniPoly<Rational> gcd(const UniPoly<Rational>& f, const UniPoly<Rational>& g);

// Yun's algorithm: f = lc(f) * prod_i factors[i]^(i+1) with every factor monic,
// square-free and pairwise coprime. Trailing entries may be the constant 1.
std::vector<UniPoly<Rational>> square_free_decomposition(const UniPoly<Rational>& f);

// Coefficient-ring conversions between the univariate and sparse views.

// Rational coefficients viewed as constant multivariate polynomials.
UniPoly<MPoly> lift(const UniPoly<Rational>& p);

// Inverse of lift; throws InexactDivision if some coefficient is not constant.
UniPoly<Rational> lower(const UniPoly<MPoly>& p);

// Collect an MPoly by powers of one of its variables.
UniPoly<MPoly> to_univariate(const MPoly& p, const std::string& var);

// Expand back into a single MPoly.
MPoly from_univariate(const UniPoly<MPoly>& p);

}  // namespace mlspec
