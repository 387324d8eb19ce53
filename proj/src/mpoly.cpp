#include "mlspec/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mlspec/error.hpp"

namespace mlspec {

namespace {

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void accumulate(MPoly::Terms& terms, const MPoly::Exponents& e, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

}  // namespace

MPoly::MPoly(int constant) : MPoly(Rational(constant)) {}

MPoly::MPoly(const Rational& constant) {
  if (sgn(constant) != 0) terms_.emplace(Exponents{}, constant);
}

MPoly::MPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

MPoly MPoly::variable(const std::string& name) {
  if (name.empty()) throw Error(ErrorCode::ParseError, "empty variable name");
  return MPoly({name}, Terms{{Exponents{1}, Rational(1)}});
}

MPoly MPoly::monomial(const Rational& coeff, const std::map<std::string, unsigned>& powers) {
  std::vector<std::string> vars;
  Exponents e;
  for (const auto& [name, k] : powers) {
    vars.push_back(name);
    e.push_back(k);
  }
  Terms terms;
  if (sgn(coeff) != 0) terms.emplace(std::move(e), coeff);
  return MPoly(std::move(vars), std::move(terms));
}

Rational MPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::InexactDivision, "polynomial is not constant: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool MPoly::contains(std::string_view var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var, std::less<>{});
}

unsigned MPoly::degree(std::string_view var) const {
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), var, std::less<>{});
  if (it == vars_.end() || *it != var) return 0;
  const auto idx = static_cast<size_t>(it - vars_.begin());
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& point) const {
  const MPoly s = substitute(point);
  if (!s.is_constant()) {
    throw Error(ErrorCode::ParseError, "evaluation point leaves variables unassigned: " + s.to_string());
  }
  return s.constant_value();
}

MPoly MPoly::substitute(const std::map<std::string, Rational>& values) const {
  std::vector<std::string> kept;
  std::vector<size_t> kept_idx;
  std::vector<std::pair<size_t, const Rational*>> fixed;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (auto it = values.find(vars_[i]); it != values.end()) {
      fixed.emplace_back(i, &it->second);
    } else {
      kept.push_back(vars_[i]);
      kept_idx.push_back(i);
    }
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    for (const auto& [i, v] : fixed) {
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), v->get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), v->get_den_mpz_t(), e[i]);
      p.canonicalize();
      coeff *= p;
    }
    if (sgn(coeff) == 0) continue;
    Exponents ke;
    ke.reserve(kept_idx.size());
    for (size_t i : kept_idx) ke.push_back(e[i]);
    accumulate(out, ke, coeff);
  }
  return MPoly(std::move(kept), std::move(out));
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result(1);
  MPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly::Terms MPoly::remapped(const std::vector<std::string>& target) const {
  if (target == vars_) return terms_;
  std::vector<size_t> pos(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    pos[i] = static_cast<size_t>(std::lower_bound(target.begin(), target.end(), vars_[i]) - target.begin());
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents te(target.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) te[pos[i]] = e[i];
    out.emplace(std::move(te), c);
  }
  return out;
}

void MPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) vars.push_back(vars_[i]);
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (size_t i = 0; i < e.size(); ++i) {
      if (used[i]) ne.push_back(e[i]);
    }
    out.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(out);
}

MPoly& MPoly::operator+=(const MPoly& other) {
  if (other.is_zero()) return *this;
  auto vars = merge_variables(vars_, other.vars_);
  Terms mine = remapped(vars);
  for (const auto& [e, c] : other.remapped(vars)) accumulate(mine, e, c);
  *this = MPoly(std::move(vars), std::move(mine));
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) { return *this += -other; }

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  auto vars = merge_variables(a.vars_, b.vars_);
  const auto ta = a.remapped(vars);
  const auto tb = b.remapped(vars);
  MPoly::Terms out;
  MPoly::Exponents e(vars.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      accumulate(out, e, Rational(ca * cb));
    }
  }
  return MPoly(std::move(vars), std::move(out));
}

MPoly divexact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) {
    const Rational inv = 1 / b.constant_value();
    MPoly q = a;
    for (auto& [e, c] : q.terms_) c *= inv;
    return q;
  }
  auto vars = merge_variables(a.vars_, b.vars_);
  MPoly::Terms rem = a.remapped(vars);
  const MPoly::Terms div = b.remapped(vars);
  const auto& [lead_e, lead_c] = *div.rbegin();
  MPoly::Terms quot;
  MPoly::Exponents shift(vars.size());
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (re[i] < lead_e[i]) {
        throw Error(ErrorCode::InexactDivision, a.to_string() + " is not divisible by " + b.to_string());
      }
      shift[i] = re[i] - lead_e[i];
    }
    const Rational factor = rc / lead_c;
    quot.emplace(shift, factor);
    MPoly::Exponents e(vars.size());
    for (const auto& [de, dc] : div) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = de[i] + shift[i];
      accumulate(rem, e, Rational(-factor * dc));
    }
  }
  return MPoly(std::move(vars), std::move(quot));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded order for display: higher total degree first, then lex-descending.
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  auto total = [](const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  std::stable_sort(order.begin(), order.end(), [&](const auto* x, const auto* y) {
    const unsigned dx = total(x->first);
    const unsigned dy = total(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* term : order) {
    const auto& [e, c] = *term;
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_[i];
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << mlspec::to_string(mag);
    } else if (mag == 1) {
      out << mono;
    } else {
      out << mlspec::to_string(mag) << '*' << mono;
    }
  }
  return out.str();
}

}  // namespace mlspec
