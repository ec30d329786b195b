/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_SOLVER_BISECT_HPP
#define QOMEGA_SOLVER_BISECT_HPP

#include <functional>

#include "core/hermop.hpp"

namespace qomega {

/** Outcome of one feasibility query at a trial level. */
struct FeasibilityCheck {
  bool feasible = false;
  double margin = 0.0;  ///< optimal slack margin; feasible iff >= -1e-9 scale
};

using FeasOracle = std::function<FeasibilityCheck(double)>;

/** Certified bracket produced by bisection: every level >= upper is feasible,
 *  every level <= lower was found infeasible (or lower is the caller's known
 *  floor). */
struct BisectBracket {
  double lower = 0.0;
  double upper = 0.0;
  FeasibilityCheck at_upper;
  int evaluations = 0;
};

/**
 * Bisect a monotone feasibility oracle on [lo, hi] to width tol.
 * Requires oracle(hi) feasible (BracketInvalid otherwise); lo is trusted as
 * an infeasible level or known lower bound and is not evaluated.
 */
BisectBracket bisect_feasible(const FeasOracle& oracle, double lo, double hi, double tol);

}  // namespace qomega

#endif
