/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_CORE_SPECTRAL_HPP
#define QOMEGA_CORE_SPECTRAL_HPP

#include "core/hermop.hpp"

namespace qomega {

/**
 * @brief Eigendecomposition with eigenvalues sorted descending and
 *        near-degenerate values merged into clusters.
 *
 * Clustering uses the relative tolerance kSpecTol against the largest
 * absolute eigenvalue; each cluster stores its representative value
 * (mean) and the index range [begin, end) into the sorted spectrum.
 */
struct SpectralDecomposition {
  RVec eigenvalues;  ///< descending
  Mat eigenvectors;  ///< columns aligned with eigenvalues

  struct Cluster {
    double value;
    int begin;
    int end;
    int size() const { return end - begin; }
  };
  std::vector<Cluster> clusters;

  /** Projector onto the eigenspace of cluster k. */
  Mat projector(int k) const;
  /** Number of distinct eigenvalues after clustering. */
  int distinct() const { return static_cast<int>(clusters.size()); }
};

/** Eigendecomposition of a Hermitian operator. Throws InvalidOperator when
 *  the input fails the Hermiticity tolerance. */
SpectralDecomposition eig_hermitian(const HermOp& h);

/** Pseudo power h^p on the support (eigenvalues below the support threshold
 *  are dropped). */
HermOp pseudo_power(const HermOp& h, double p);

}  // namespace qomega

#endif
