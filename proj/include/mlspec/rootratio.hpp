#pragma once

#include <string>

#include "mlspec/exact/mpoly.hpp"
#include "mlspec/exact/rational.hpp"
#include "mlspec/exact/unipoly.hpp"

namespace mlspec {

// Name of the ratio variable in every root-ratio polynomial.
inline const std::string kRatioVariable = "r";

template <class R>
struct RootRatioResult {
  UniPoly<R> poly;       // R_p in kRatioVariable
  int source_degree = 0; // deg p
};

// R_p(r) = prod_{i != j} (alpha_i r - alpha_j) for the roots alpha_i of a monic
// p of degree n >= 2. Its zeros are the root ratios alpha_i / alpha_j (i != j)
// when p(0) != 0.
//
// R_p is obtained exactly from Res_x(p(r x), p(x)) = p(0) (r - 1)^n R_p(r); no
// numeric root is ever computed.
//
// A repeated root alpha_i = alpha_j (i != j) contributes the ratio 1, so then
// R_p(1) = 0. This follows the algebraic definition literally: a ratio of 1 is
// a genuine root ratio even though it does not come from two distinct
// eigenvalues.
//
// Numeric input that is not monic is divided by its leading coefficient first.
// Errors: DegreeTooSmall (deg < 2), ZeroConstantTerm (p(0) = 0).
RootRatioResult<Rational> root_ratio_poly(const UniPoly<Rational>& p);

// Symbolic variant. The leading coefficient must be exactly 1 (NonMonic
// otherwise); a symbolic constant term is accepted, an identically zero one is
// not. The coefficients must not mention kRatioVariable (VariableCollision).
RootRatioResult<MPoly> root_ratio_poly(const UniPoly<MPoly>& p);

// C_{p,q} = Res_r(R_p, R_q). Vanishes whenever p and q share a root ratio.
Rational common_root_ratio_poly(const UniPoly<Rational>& p, const UniPoly<Rational>& q);
MPoly common_root_ratio_poly(const UniPoly<MPoly>& p, const UniPoly<MPoly>& q);

// Exact decision: do p and q (numeric, p(0) != 0, q(0) != 0) have a common root
// ratio? Evaluates C_{p,q} == 0. A vanishing constant term throws
// ZeroConstantTerm rather than answering, because C_{p,q} also vanishes in that
// degenerate case. As with root_ratio_poly, a repeated root in both p and q
// counts as the shared ratio 1.
bool has_common_root_ratio(const UniPoly<Rational>& p, const UniPoly<Rational>& q);

}  // namespace mlspec
