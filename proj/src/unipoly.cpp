#include "mlspec/exact/unipoly.hpp"

namespace mlspec {

UniPoly<MPoly> lift(const UniPoly<Rational>& p) {
  std::vector<MPoly> out;
  out.reserve(p.coefficients().size());
  for (const Rational& c : p.coefficients()) out.emplace_back(c);
  return UniPoly<MPoly>(std::move(out), p.variable());
}

UniPoly<Rational> lower(const UniPoly<MPoly>& p) {
  std::vector<Rational> out;
  out.reserve(p.coefficients().size());
  for (const MPoly& c : p.coefficients()) out.push_back(c.constant_value());
  return UniPoly<Rational>(std::move(out), p.variable());
}

UniPoly<MPoly> to_univariate(const MPoly& p, const std::string& var) {
  const unsigned deg = p.degree(var);
  std::vector<MPoly> out(deg + 1);
  const auto& vars = p.variables();
  const auto idx_it = std::find(vars.begin(), vars.end(), var);
  for (const auto& [e, c] : p.terms()) {
    std::map<std::string, unsigned> powers;
    unsigned k = 0;
    for (size_t i = 0; i < vars.size(); ++i) {
      if (idx_it != vars.end() && i == static_cast<size_t>(idx_it - vars.begin())) {
        k = e[i];
      } else if (e[i] != 0) {
        powers[vars[i]] = e[i];
      }
    }
    out[k] += MPoly::monomial(c, powers);
  }
  return UniPoly<MPoly>(std::move(out), var);
}

DivisionResult divide_with_remainder(const UniPoly<Rational>& f, const UniPoly<Rational>& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const std::string& var = f.degree() > 0 ? f.variable() : g.variable();
  std::vector<Rational> rem = f.coefficients();
  const auto& div = g.coefficients();
  const int dg = g.degree();
  if (f.degree() < dg) return {UniPoly<Rational>({}, var), f.renamed(var)};
  std::vector<Rational> quot(static_cast<size_t>(f.degree() - dg + 1));
  const Rational lead = div.back();
  for (int k = f.degree(); k >= dg; --k) {
    const Rational t = rem[static_cast<size_t>(k)] / lead;
    if (sgn(t) == 0) continue;
    const auto shift = static_cast<size_t>(k - dg);
    quot[shift] = t;
    for (size_t j = 0; j < div.size(); ++j) rem[shift + j] -= t * div[j];
  }
  return {UniPoly<Rational>(std::move(quot), var), UniPoly<Rational>(std::move(rem), var)};
}

namespace {

UniPoly<Rational> monic(const UniPoly<Rational>& p) {
  if (p.is_zero()) return p;
  const Rational lead = p.leading();
  std::vector<Rational> c = p.coefficients();
  for (auto& x : c) x /= lead;
  return UniPoly<Rational>(std::move(c), p.variable());
}

}  // namespace

UniPoly<Rational> gcd(const UniPoly<Rational>& f, const UniPoly<Rational>& g) {
  UniPoly<Rational> a = monic(f);
  UniPoly<Rational> b = monic(g);
  while (!b.is_zero()) {
    UniPoly<Rational> r = monic(divide_with_remainder(a, b).remainder);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<UniPoly<Rational>> square_free_decomposition(const UniPoly<Rational>& f) {
  if (f.degree() < 1) return {};
  const UniPoly<Rational> fm = monic(f);
  const UniPoly<Rational> df = derivative(fm);
  const UniPoly<Rational> a0 = gcd(fm, df);
  UniPoly<Rational> b = divide_with_remainder(fm, a0).quotient;
  UniPoly<Rational> c = divide_with_remainder(df, a0).quotient;
  UniPoly<Rational> d = c - derivative(b);
  std::vector<UniPoly<Rational>> out;
  while (b.degree() > 0) {
    const UniPoly<Rational> a = gcd(b, d);
    out.push_back(a);
    b = divide_with_remainder(b, a).quotient;
    c = divide_with_remainder(d, a).quotient;
    d = c - derivative(b);
  }
  return out;
}

MPoly from_univariate(const UniPoly<MPoly>& p) {
  MPoly acc;
  const MPoly x = MPoly::variable(p.variable());
  MPoly power(1);
  for (const MPoly& c : p.coefficients()) {
    acc += c * power;
    power *= x;
  }
  return acc;
}

}  // namespace mlspec
