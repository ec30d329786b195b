/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_TESTS_UTIL_HPP
#define QOMEGA_TESTS_UTIL_HPP

#include "core/hermop.hpp"
#include "core/sampling.hpp"
#include "core/states.hpp"

namespace qtest {

using namespace qomega;

inline double max_abs_diff(const Mat& a, const Mat& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Two independent full-rank states of dimension d from one seed.
inline std::pair<HermOp, HermOp> state_pair(int d, std::uint64_t seed) {
  Rng rng(seed);
  HermOp rho = full_rank_state(d, rng);
  HermOp sigma = full_rank_state(d, rng);
  return {rho, sigma};
}

/// Random mixed bipartite state on dA x dB (full rank).
inline HermOp bipartite_state(int da, int db, std::uint64_t seed) {
  Rng rng(seed);
  HermOp rho = full_rank_state(da * db, rng);
  return rho.with_cut(da, db);
}

/// Random separable state: uniform mixture of k pure products.
inline HermOp separable_state(int da, int db, int k, Rng& rng) {
  HermOp acc(da, db, Mat::Zero(da * db, da * db));
  for (int i = 0; i < k; ++i) acc = acc + product_pure(da, db, rng) * (1.0 / k);
  return acc;
}

/// Random CPTP channel as k Kraus operators (Ginibre blocks whitened so
/// that sum K^dag K = I).
inline std::vector<Mat> random_kraus(int d, int k, Rng& rng) {
  std::vector<Mat> gs(k);
  Mat s = Mat::Zero(d, d);
  for (auto& g : gs) {
    g = Mat::NullaryExpr(d, d, [&](Eigen::Index, Eigen::Index) {
      return cxd(rng.normal(), rng.normal());
    });
    s += g.adjoint() * g;
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  Mat whiten = es.operatorInverseSqrt();
  for (auto& g : gs) g = g * whiten;
  return gs;
}

inline HermOp apply_kraus(const std::vector<Mat>& ks, const HermOp& h) {
  Mat out = Mat::Zero(h.dim(), h.dim());
  for (const auto& k : ks) out += k * h.m * k.adjoint();
  return HermOp(h.da, h.db, hermitize(out));
}

/// Reduction map ((tr X) I - X)/(d-1): positive but not completely positive.
inline HermOp reduction_map(const HermOp& h) {
  int d = h.dim();
  Mat out = (h.m.trace() * Mat::Identity(d, d) - h.m) / (d - 1.0);
  return HermOp(h.da, h.db, hermitize(out));
}

}  // namespace qtest

#endif
