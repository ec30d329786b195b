/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_SEP_SEPSET_HPP
#define QOMEGA_SEP_SEPSET_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "core/hermop.hpp"

namespace qomega {

/**
 * @brief Explicit convex mixture of pure product states.
 *
 * Separable by construction: every term is |a_i><a_i| (x) |b_i><b_i| with the
 * factor vectors stored, so separability of state() is verifiable entrywise.
 */
struct SeparableCandidate {
  std::vector<double> weights;  ///< nonnegative mixture weights
  std::vector<CVec> factors_a;  ///< unit vectors on the A side
  std::vector<CVec> factors_b;  ///< unit vectors on the B side

  std::size_t size() const { return weights.size(); }
  /** The mixture sum_i w_i |a_i b_i><a_i b_i|. */
  HermOp state() const;
};

/**
 * @brief Certified two-sided bracket for a separable-set optimization.
 *
 * d_omega_sep fills it on the log2 scale; sep_sup_ratio on the linear scale.
 * Certificate slots: ppt_state backs the outer (PPT-relaxation) side,
 * witness carries the decomposable dual pair (A, B), and candidate is the
 * inner explicit product mixture (attains upper for d_omega_sep, attains
 * lower for sep_sup_ratio).
 */
struct Bracket {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  std::optional<HermOp> ppt_state;
  std::optional<std::pair<HermOp, HermOp>> witness;
  std::optional<SeparableCandidate> candidate;
};

/** Tuning knobs shared by the separable-set operations. */
struct SepOptions {
  double gap_tol = 1e-8;     ///< interior-point duality-gap tolerance
  double bisect_tol = 1e-6;  ///< bisection width on the log2 scale
  int refine_rounds = 40;    ///< column-generation rounds for the inner mixture
  int ascent_restarts = 32;  ///< random restarts for product-state searches
  std::uint64_t seed = 7;    ///< deterministic seed for restarts
  double bisect_hi = 0.0;    ///< log2 upper anchor; 0 selects the automatic one
  /// Caller-supplied inner points joining the built-in candidate family.
  std::vector<SeparableCandidate> extra_candidates;
};

/** Positive partial transpose test on the normalized state (min eigenvalue
 *  of the partial transpose >= -1e-9). */
bool is_ppt(const HermOp& rho);

/**
 * @brief Bracket for sup tr(M X) / tr(N X) over separable X.
 *
 * Lower: alternating generalized-eigenvector ascent over pure products (the
 * linear-fractional objective attains its supremum at extreme points).
 * Upper: Charnes-Cooper program over the PPT cone, max tr(MX) subject to
 * tr(NX) = 1, X PSD, X^{T_B} PSD. A product state with vanishing denominator
 * and positive numerator collapses the bracket to +infinity; an unbounded
 * PPT program raises UnboundedRatio.
 */
Bracket sep_sup_ratio(const HermOp& m_op, const HermOp& n_op,
                      const SepOptions& opts = {});

/**
 * @brief Bisection bracket of the PPT-relaxation value (log2 scale).
 *
 * Feasibility at level lambda asks for a PPT-cone element sigma with
 * sigma <= rho <= lambda sigma (the second scale is absorbed into sigma);
 * each query maximizes the common slack margin of the four operator
 * inequalities. Returns the bracket with the feasible element at the upper
 * end; throws BracketInvalid when no finite feasible anchor exists.
 */
Bracket d_omega_ppt_bisect(const HermOp& rho, const SepOptions& opts = {});

/**
 * @brief Decomposable-witness dual bracket of the PPT-relaxation value.
 *
 * Solves sup tr(A rho) s.t. tr(B rho) = 1, B - A = P + Q^{T_B} with
 * A, B, P, Q PSD; lower is the attained feasible value, upper the conic
 * dual value, both on the log2 scale, and the witness pair is returned.
 * An unbounded program yields an infinite lower bound.
 */
Bracket d_omega_ppt_dual(const HermOp& rho, const SepOptions& opts = {});

/**
 * @brief Certified bracket of the Hilbert projective distance from rho to
 *        the separable set (log2 scale).
 *
 * Lower: the larger of the PPT bisection bound and the decomposable dual
 * value. Upper: the smallest d_omega(rho, sigma) over an inner family of
 * explicit separable candidates (maximally mixed, marginal product, twirled
 * commuting families at two qubits, caller extras), then refined by column
 * generation over a growing product dictionary until it meets the lower
 * bound or the round budget. When no candidate shares rho's support the
 * upper side stays +infinity, flagged by the IEEE value itself.
 */
Bracket d_omega_sep(const HermOp& rho, const SepOptions& opts = {});

}  // namespace qomega

#endif
