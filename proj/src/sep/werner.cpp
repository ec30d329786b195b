/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "sep/werner.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "core/states.hpp"

namespace qomega {

namespace {

void require_square(const HermOp& rho, const char* who) {
  if (rho.da != rho.db || rho.da < 2)
    throw Error(Err::ContractViolation,
                std::string(who) + " needs a square bipartite cut d x d with d >= 2");
}

std::pair<HermOp, HermOp> base_witness(double p, int d) {
  const double inv = 1.0 / p;
  return {antisym_projector(d) * inv, sym_projector(d) * inv};
}

}  // namespace

WernerPoint werner_family(const HermOp& rho) {
  require_square(rho, "werner_family");
  const double tr = rho.trace();
  if (!(std::abs(tr) > 1e-12))
    throw Error(Err::ZeroOperator, "werner_family input has vanishing trace");
  const double fw = (swap_op(rho.da).m * rho.m).trace().real() / tr;
  return {(fw + 1.0) / 2.0, rho.da};
}

IsotropicPoint isotropic_family(const HermOp& rho) {
  require_square(rho, "isotropic_family");
  const double tr = rho.trace();
  if (!(std::abs(tr) > 1e-12))
    throw Error(Err::ZeroOperator, "isotropic_family input has vanishing trace");
  const double overlap = (max_entangled(rho.da).m * rho.m).trace().real() / tr;
  return {overlap, rho.da};
}

WernerSepValue werner_domega_sep(double p, int d) {
  if (p < 0.0 || p > 1.0 || d < 2)
    throw Error(Err::ContractViolation,
                "werner_domega_sep needs p in [0,1] and d >= 2");
  WernerSepValue out;
  if (p == 0.0) {
    out.value = {std::numeric_limits<double>::infinity(), false,
                 DivMethod::eigen_closed_form};
    return out;
  }
  out.value = {std::max(0.0, std::log2((1.0 - p) / p)), true,
               DivMethod::eigen_closed_form};
  if (p < 0.5) out.witness = base_witness(p, d);
  return out;
}

std::pair<HermOp, HermOp> werner_witness_tensor(double p, int d, int n) {
  if (!(p > 0.0) || !(p < 0.5) || d < 2)
    throw Error(Err::ContractViolation,
                "werner_witness_tensor needs 0 < p < 1/2 and d >= 2");
  if (n < 1 || n > 3)
    throw Error(Err::SizeGuard, "werner_witness_tensor caps the copy count at 3");
  auto [a1, b1] = base_witness(p, d);
  HermOp an = tensor_copies(a1, n);
  HermOp bn = tensor_copies(b1, n);
  if (partial_transpose(bn - an).min_eig() < -1e-9)
    throw Error(Err::NumericalBreakdown,
                "tensor witness failed its partial-transpose validity check");
  return {an, bn};
}

}  // namespace qomega
