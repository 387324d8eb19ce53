#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mlspec {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw num/den go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" and terminating decimals such as "-1.25". The
// decimal form is converted exactly; no rounding takes place.
Rational parse_rational(std::string_view text);

// "p" or "p/q".
std::string to_string(const Rational& value);

long double to_long_double(const Rational& value);
inline double to_double(const Rational& value) { return static_cast<double>(to_long_double(value)); }

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_one(const Rational& value) { return value == 1; }

// Division in a field is always exact; the overload exists so that generic
// polynomial code can call divexact on any coefficient ring.
Rational divexact(const Rational& num, const Rational& den);

}  // namespace mlspec
