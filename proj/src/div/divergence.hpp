/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_DIV_DIVERGENCE_HPP
#define QOMEGA_DIV_DIVERGENCE_HPP

#include "core/hermop.hpp"

namespace qomega {

/** Computation route used to obtain a divergence value. */
enum class DivMethod { eigen_closed_form, sdp, classical };

const char* div_method_name(DivMethod m);

/**
 * @brief A divergence value in base-2 logarithmic units.
 *
 * finite = false marks the +infinity case (support mismatch); value then
 * holds +infinity as well, so the two fields never disagree.
 */
struct DivergenceValue {
  double value = 0.0;
  bool finite = true;
  DivMethod method = DivMethod::eigen_closed_form;
};

/**
 * @brief Max-relative entropy D_max(rho, sigma) = log2 inf{ l : rho <= l sigma }.
 *
 * The eigen route returns log2 of the largest eigenvalue of
 * sigma^{-1/2} rho sigma^{-1/2} taken on supp(sigma); the sdp route solves
 * the dual program max tr(rho X) subject to tr(sigma X) <= 1, X >= 0.
 * Returns +infinity when supp(rho) is not contained in supp(sigma).
 * Throws ZeroOperator when either argument vanishes.
 */
DivergenceValue d_max(const HermOp& rho, const HermOp& sigma,
                      DivMethod method = DivMethod::eigen_closed_form);

/**
 * @brief Hilbert projective divergence D_Omega = D_max(rho,sigma) + D_max(sigma,rho).
 *
 * Symmetric, scale invariant in both arguments, zero exactly on
 * proportional operators, and finite exactly when the supports agree.
 * The sdp route solves the one-shot program
 * max tr(A rho) s.t. tr(B rho) = 1, tr((B - A) sigma) >= 0, A, B >= 0.
 */
DivergenceValue d_omega(const HermOp& rho, const HermOp& sigma,
                        DivMethod method = DivMethod::eigen_closed_form);

/** D_Omega of two nonnegative vectors: log2 max(p/q) + log2 max(q/p) on the
 *  common support, +infinity when the supports differ. */
DivergenceValue d_omega_classical(const RVec& p, const RVec& q);

/** Umegaki relative entropy tr[rho(log2 rho - log2 sigma)]; +infinity on
 *  support mismatch. */
DivergenceValue rel_entropy(const HermOp& rho, const HermOp& sigma);

/** Sandwiched Renyi divergence of order alpha > 1 via the
 *  sigma^{(1-alpha)/2alpha} sandwich and the Schatten-alpha norm. */
DivergenceValue sandwiched_renyi(double alpha, const HermOp& rho, const HermOp& sigma);

/** Relative-entropy variance tr[rho(log2 rho - log2 sigma - D)^2]; +infinity
 *  on support mismatch. */
DivergenceValue rel_entropy_variance(const HermOp& rho, const HermOp& sigma);

/**
 * @brief Smoothing construction at level lambda.
 *
 * Splits rho against 2^lambda sigma into the excess part
 * L1 = positive part of (rho - 2^lambda sigma) and returns
 * epsilon = tr(L1) / 2^(lambda+1) together with the perturbed reference
 * (L1 + 2^lambda sigma) / 2^lambda, which satisfies
 * d_max(rho, smoothed) <= lambda by construction.
 */
struct SmoothingPoint {
  double epsilon = 0.0;
  HermOp smoothed;
};

SmoothingPoint smoothing_point(const HermOp& rho, const HermOp& sigma, double lambda);

/**
 * @brief Perturbation bound on |D_Omega(rho + eps I, sigma) - D_Omega(rho, sigma)|
 *        for full-rank states, evaluated from extremal eigenvalue quantities.
 *
 * Throws RankDeficient when either state fails the full-rank threshold.
 */
double lhl_bound(const HermOp& rho, const HermOp& sigma, double epsilon);

/** Trace-distance bound tr(sigma) * min(2^{D_Omega(rho,sigma)} - 1, 2) for
 *  substates of equal trace and equal support. Throws TraceMismatch or
 *  SupportMismatch when the preconditions fail. */
double l18_bound(const HermOp& rho, const HermOp& sigma);

}  // namespace qomega

#endif
