#include "mlspec/exact/parse.hpp"

#include <cctype>
#include <sstream>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly expression() {
    MPoly acc;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MPoly t = term();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = power();
    while (accept('*')) acc *= power();
    return acc;
  }

  MPoly power() {
    MPoly base = atom();
    if (accept('^')) {
      skip_space();
      const std::string digits = take_digits();
      if (digits.empty()) fail("expected a non-negative integer exponent");
      if (digits.size() > 6) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string take_digits() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = take_digits();
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        fail("floating literals are not accepted");
      }
      if (accept('/')) {
        skip_space();
        const std::string den = take_digits();
        if (den.empty()) fail("expected an integer denominator");
        if (pos_ < text_.size() && text_[pos_] == '.') fail("floating literals are not accepted");
        return MPoly(make_rational(Integer(num), Integer(den)));
      }
      return MPoly(Rational(Integer(num)));
    }
    if (c == '.') fail("floating literals are not accepted");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      return MPoly::variable(std::string(text_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

std::string power_suffix(const std::string& var, size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return var + "^" + std::to_string(k);
}

}  // namespace

MPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

UniPoly<MPoly> parse_symbolic_univariate(std::string_view text, const std::string& var) {
  return to_univariate(parse_polynomial(text), var);
}

UniPoly<Rational> parse_univariate(std::string_view text, const std::string& var) {
  const MPoly p = parse_polynomial(text);
  for (const auto& v : p.variables()) {
    if (v != var) {
      throw Error(ErrorCode::ParseError, "unexpected symbol '" + v + "' (numeric coefficients required)");
    }
  }
  return lower(to_univariate(p, var));
}

std::string format_polynomial(const UniPoly<Rational>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (size_t k = c.size(); k-- > 0;) {
    if (is_zero(c[k])) continue;
    const bool negative = sgn(c[k]) < 0;
    const Rational mag = abs(c[k]);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = power_suffix(p.variable(), k);
    if (mono.empty()) {
      out << to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

std::string format_polynomial(const UniPoly<MPoly>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coefficients();
  for (size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    const std::string mono = power_suffix(p.variable(), k);
    std::string coeff = c[k].to_string();
    bool negative = false;
    if (c[k].term_count() == 1 && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    const bool leading = first;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    if (c[k].term_count() > 1 && (!mono.empty() || !leading)) coeff = "(" + coeff + ")";
    if (mono.empty()) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono;
    } else {
      out << coeff << '*' << mono;
    }
  }
  return out.str();
}

}  // namespace mlspec
