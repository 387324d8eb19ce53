#include "mlspec/rootratio.hpp"

#include "mlspec/error.hpp"
#include "mlspec/exact/resultant.hpp"

namespace mlspec {

namespace {

UniPoly<Rational> make_monic(const UniPoly<Rational>& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root ratio polynomial of the zero polynomial");
  const Rational lead = p.leading();
  if (lead == 1) return p;
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const Rational& a : p.coefficients()) c.push_back(Rational(a / lead));
  return UniPoly<Rational>(std::move(c), p.variable());
}

void check_shape(const UniPoly<MPoly>& p) {
  if (p.degree() < 2) {
    throw Error(ErrorCode::DegreeTooSmall, "root ratios need degree >= 2, got " + std::to_string(p.degree()));
  }
  if (!is_one(p.leading())) {
    throw Error(ErrorCode::NonMonic, "symbolic polynomial must be monic, leading coefficient " + p.leading().to_string());
  }
  if (p.coefficient(0).is_zero()) throw Error(ErrorCode::ZeroConstantTerm, "p(0) = 0");
  if (p.variable() == kRatioVariable) {
    throw Error(ErrorCode::VariableCollision, "polynomial variable may not be '" + kRatioVariable + "'");
  }
}

}  // namespace

RootRatioResult<MPoly> root_ratio_poly(const UniPoly<MPoly>& p) {
  check_shape(p);
  for (const MPoly& c : p.coefficients()) {
    if (c.contains(kRatioVariable)) {
      throw Error(ErrorCode::VariableCollision, "coefficient " + c.to_string() + " uses the ratio variable");
    }
  }
  const int n = p.degree();
  const MPoly r = MPoly::variable(kRatioVariable);

  const MPoly res = sylvester_resultant(p.scale_argument(r), p);
  const UniPoly<MPoly> res_r = to_univariate(res, kRatioVariable);

  const UniPoly<MPoly> r_minus_one({MPoly(-1), MPoly(1)}, kRatioVariable);
  const UniPoly<MPoly> divisor = p.coefficient(0) * r_minus_one.pow(static_cast<unsigned>(n));
  return {exact_divide(res_r, divisor), n};
}

RootRatioResult<Rational> root_ratio_poly(const UniPoly<Rational>& p) {
  const UniPoly<Rational> monic = make_monic(p);
  if (monic.degree() < 2) {
    throw Error(ErrorCode::DegreeTooSmall, "root ratios need degree >= 2, got " + std::to_string(monic.degree()));
  }
  if (is_zero(monic.coefficient(0))) throw Error(ErrorCode::ZeroConstantTerm, "p(0) = 0");
  const auto symbolic = root_ratio_poly(lift(monic));
  return {lower(symbolic.poly), symbolic.source_degree};
}

MPoly common_root_ratio_poly(const UniPoly<MPoly>& p, const UniPoly<MPoly>& q) {
  return sylvester_resultant(root_ratio_poly(p).poly, root_ratio_poly(q).poly);
}

Rational common_root_ratio_poly(const UniPoly<Rational>& p, const UniPoly<Rational>& q) {
  return sylvester_resultant(root_ratio_poly(p).poly, root_ratio_poly(q).poly);
}

bool has_common_root_ratio(const UniPoly<Rational>& p, const UniPoly<Rational>& q) {
  return is_zero(common_root_ratio_poly(p, q));
}

}  // namespace mlspec
