/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "solver/bisect.hpp"

namespace qomega {

BisectBracket bisect_feasible(const FeasOracle& oracle, double lo, double hi, double tol) {
  if (!(tol > 0.0)) throw Error(Err::ContractViolation, "bisection tol must be positive");
  if (!(lo <= hi)) throw Error(Err::ContractViolation, "bisection needs lo <= hi");

  BisectBracket out;
  out.at_upper = oracle(hi);
  out.evaluations = 1;
  if (!out.at_upper.feasible)
    throw Error(Err::BracketInvalid, "feasibility oracle rejects the upper endpoint");

  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    FeasibilityCheck fc = oracle(mid);
    ++out.evaluations;
    if (fc.feasible) {
      hi = mid;
      out.at_upper = fc;
    } else {
      lo = mid;
    }
  }
  out.lower = lo;
  out.upper = hi;
  return out;
}

}  // namespace qomega
