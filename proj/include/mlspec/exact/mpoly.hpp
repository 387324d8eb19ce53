#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mlspec/exact/rational.hpp"

namespace mlspec {

// Sparse multivariate polynomial with exact rational coefficients.
//
// Variables are named strings kept in ascending order; an exponent vector is
// aligned with that list. Terms are ordered lexicographically on exponent
// vectors, so the last map entry is the lex-leading term. The representation
// is canonical: no zero coefficients are stored and every listed variable
// occurs in some term, which makes operator== structural.
class MPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using Terms = std::map<Exponents, Rational>;

  MPoly() = default;
  MPoly(int constant);  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static MPoly variable(const std::string& name);
  static MPoly monomial(const Rational& coeff, const std::map<std::string, unsigned>& powers);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  // Requires is_constant().
  Rational constant_value() const;

  bool contains(std::string_view var) const;
  unsigned degree(std::string_view var) const;
  unsigned total_degree() const;

  // Full evaluation; every variable must be assigned.
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  // Partial specialization: assigned variables are replaced by their values.
  MPoly substitute(const std::map<std::string, Rational>& values) const;

  MPoly pow(unsigned k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Exact quotient a / b; throws InexactDivision when b does not divide a.
  friend MPoly divexact(const MPoly& a, const MPoly& b);

  std::string to_string() const;

 private:
  MPoly(std::vector<std::string> vars, Terms terms);

  Terms remapped(const std::vector<std::string>& target) const;
  void normalize();

  std::vector<std::string> vars_;
  Terms terms_;
};

inline bool is_zero(const MPoly& p) { return p.is_zero(); }
inline bool is_one(const MPoly& p) { return p.is_constant() && !p.is_zero() && p.constant_value() == 1; }
inline std::string to_string(const MPoly& p) { return p.to_string(); }

}  // namespace mlspec
