/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_SEP_ASCENT_HPP
#define QOMEGA_SEP_ASCENT_HPP

#include <cstdint>
#include <vector>

#include "core/hermop.hpp"

namespace qomega {

/** Pure product vector |a> (x) |b> together with an objective value. */
struct ProductPoint {
  CVec a;
  CVec b;
  double value = 0.0;

  /** Rank-one projector |a><a| (x) |b><b| with cut (|a|, |b|). */
  HermOp projector() const;
};

/**
 * @brief Best ratio <ab|M|ab> / <ab|N|ab> over pure product states.
 *
 * Alternating generalized-eigenvector ascent: with one factor fixed, the
 * ratio is a Rayleigh quotient of the contracted pair, maximized exactly by
 * the top generalized eigenvector. Restarts from seeded random products plus
 * a Schmidt-vector start; each restart sweeps until the relative improvement
 * drops below 1e-9 or 200 sweeps elapse. When a product with a vanishing
 * denominator and positive numerator is met the value is +infinity and the
 * certificate product is returned.
 */
ProductPoint max_product_ratio(const HermOp& m_op, const HermOp& n_op,
                               int restarts, std::uint64_t seed);

/**
 * @brief Minimum of <ab|G|ab> over pure product states.
 *
 * Alternating smallest-eigenvector descent with seeded restarts plus a
 * Schmidt-vector start from G's bottom eigenvector; monotone per half-step.
 */
ProductPoint min_product_form(const HermOp& g, int restarts, std::uint64_t seed);

}  // namespace qomega

#endif
