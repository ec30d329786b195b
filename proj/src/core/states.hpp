/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_CORE_STATES_HPP
#define QOMEGA_CORE_STATES_HPP

#include "core/hermop.hpp"

namespace qomega {

/** Swap operator F on d x d (F |i,j> = |j,i>). */
HermOp swap_op(int d);

/** Projector onto the symmetric subspace of d x d. */
HermOp sym_projector(int d);

/** Projector onto the antisymmetric subspace of d x d. */
HermOp antisym_projector(int d);

/** Maximally entangled state Psi_m = |psi><psi|, |psi> = sum_i |ii>/sqrt(m). */
HermOp max_entangled(int m);

/** Normalized complement of the maximally entangled state,
 *  tau_m = (I - Psi_m)/(m^2 - 1). */
HermOp mes_complement(int m);

/** Werner family on d x d: rho_p = p * P_sym/tr + (1-p) * P_anti/tr.
 *  p is the symmetric weight; separable exactly when p >= 1/2. */
HermOp werner_state(double p, int d = 2);

/** Isotropic family on m x m: omega_f = f * Psi_m + (1-f) * tau_m.
 *  Separable exactly when f <= 1/m. */
HermOp isotropic_state(double f, int m);

}  // namespace qomega

#endif
