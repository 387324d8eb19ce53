#pragma once

#include <string>
#include <string_view>

#include "mlspec/exact/mpoly.hpp"
#include "mlspec/exact/unipoly.hpp"

namespace mlspec {

// Text format: integer or rational literals ("3", "3/2"), identifiers, "+",
// "-", explicit "*", "^" with a non-negative integer exponent, parentheses.
// Floating literals such as "2.5" are rejected with ParseError.
MPoly parse_polynomial(std::string_view text);

// Parse and collect by powers of `var`; other identifiers become symbolic
// coefficients.
UniPoly<MPoly> parse_symbolic_univariate(std::string_view text, const std::string& var = "x");

// As above, but every coefficient must be a number.
UniPoly<Rational> parse_univariate(std::string_view text, const std::string& var = "x");

// Descending-degree rendering in the same text format, e.g. "2*r^2 - 5*r + 2"
// or "c*r^2 + (-b^2 + 2*c)*r + c".
std::string format_polynomial(const UniPoly<Rational>& p);
std::string format_polynomial(const UniPoly<MPoly>& p);

}  // namespace mlspec
