/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_CORE_SAMPLING_HPP
#define QOMEGA_CORE_SAMPLING_HPP

#include <random>

#include "core/hermop.hpp"

namespace qomega {

/** Deterministic random source; every sampler threads one of these through. */
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  double normal() {
    std::normal_distribution<double> n(0.0, 1.0);
    return n(gen);
  }
  double uniform() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(gen);
  }
};

/** Haar-random unitary (QR of a complex Ginibre matrix with phase fix). */
Mat haar_unitary(int d, Rng& rng);

/** Random density matrix with minimum eigenvalue >= 1e-3 (Ginibre state
 *  mixed toward the maximally mixed state just enough to clear the floor). */
HermOp full_rank_state(int d, Rng& rng);

/** Random pure product state on dA x dB. */
HermOp product_pure(int da, int db, Rng& rng);

/** Random k-outcome POVM on dimension d (Ginibre elements normalized to
 *  sum to the identity). */
std::vector<HermOp> random_povm(int k, int d, Rng& rng);

/** Random pure state vector. */
CVec random_pure_vector(int d, Rng& rng);

}  // namespace qomega

#endif
