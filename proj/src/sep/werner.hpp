/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_SEP_WERNER_HPP
#define QOMEGA_SEP_WERNER_HPP

#include <optional>
#include <utility>

#include "core/hermop.hpp"
#include "div/divergence.hpp"

namespace qomega {

/** Werner-family coordinates: symmetric weight p on a d x d cut. */
struct WernerPoint {
  double p = 0.0;
  int d = 2;
};

/** Isotropic-family coordinates: overlap with the maximally entangled state. */
struct IsotropicPoint {
  double overlap = 0.0;
  int m = 2;
};

/** Projection of a state onto the Werner family via p = (tr(F rho) + 1) / 2;
 *  exact for inputs already in the family. Requires a square cut. */
WernerPoint werner_family(const HermOp& rho);

/** Projection onto the isotropic family via the maximally entangled overlap;
 *  exact for inputs already in the family. Requires a square cut. */
IsotropicPoint isotropic_family(const HermOp& rho);

/** Closed-form separable-set distance of a Werner state with its witness. */
struct WernerSepValue {
  DivergenceValue value;  ///< max(0, log2((1-p)/p)); +infinity flag at p = 0
  /// Dual witness pair (A, B) = (P_as/p, P_s/p), present exactly when
  /// 0 < p < 1/2 (the entangled regime where the value is positive).
  std::optional<std::pair<HermOp, HermOp>> witness;
};

/** max(0, log2((1-p)/p)) with the certifying witness pair for p < 1/2. */
WernerSepValue werner_domega_sep(double p, int d);

/**
 * @brief Tensor-power witnesses (A^n, B^n) for n Werner copies.
 *
 * Validity on PPT states is certified by checking that the full partial
 * transpose of B_n - A_n has minimum eigenvalue >= -1e-9 (each swap factor
 * transposes to d times the maximally entangled projector, leaving the
 * odd-degree sum of PSD terms). n is capped at 3 by a size guard.
 */
std::pair<HermOp, HermOp> werner_witness_tensor(double p, int d, int n);

}  // namespace qomega

#endif
