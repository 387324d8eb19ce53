#include "mlspec/exact/rational.hpp"

#include <cmath>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// |z| ~= mantissa * 2^exponent with a 64-bit mantissa.
long double magnitude_parts(const Integer& z, long& exponent) {
  Integer a = abs(z);
  const size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
  exponent = 0;
  if (bits > 64) {
    exponent = static_cast<long>(bits - 64);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  }
  return static_cast<long double>(mpz_get_ui(a.get_mpz_t()));
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    value = make_rational(Integer(std::string(num), 10), Integer(std::string(den), 10));
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw Error(ErrorCode::ParseError, "malformed decimal '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
    value = make_rational(digits, scale);
  } else {
    if (!all_digits(s)) {
      throw Error(ErrorCode::ParseError, "malformed integer '" + std::string(text) + "'");
    }
    value = Rational(Integer(std::string(s), 10));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

long double to_long_double(const Rational& value) {
  if (sgn(value) == 0) return 0.0L;
  long en = 0;
  long ed = 0;
  const long double n = magnitude_parts(value.get_num(), en);
  const long double d = magnitude_parts(value.get_den(), ed);
  const long double mag = std::ldexp(n / d, static_cast<int>(en - ed));
  return sgn(value) < 0 ? -mag : mag;
}

Rational divexact(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) throw Error(ErrorCode::InexactDivision, "division by zero");
  return Rational(num / den);
}

}  // namespace mlspec
