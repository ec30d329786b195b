/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "core/sampling.hpp"

namespace qomega {

namespace {

Mat ginibre(int rows, int cols, Rng& rng) {
  Mat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = cxd(rng.normal(), rng.normal());
  return g;
}

}  // namespace

Mat haar_unitary(int d, Rng& rng) {
  Mat g = ginibre(d, d, rng);
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    cxd rii = r(i, i);
    cxd phase = (std::abs(rii) > 0) ? rii / std::abs(rii) : cxd(1, 0);
    q.col(i) *= phase;
  }
  return q;
}

HermOp full_rank_state(int d, Rng& rng) {
  Mat g = ginibre(d, d, rng);
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  HermOp state(d, 1, hermitize(rho));
  const double floor = 1e-3;
  const double lmin = state.min_eig();
  if (lmin < floor) {
    // (1-t) lmin + t/d = floor; d <= 36 keeps 1/d safely above the floor
    const double t = (floor - lmin) / (1.0 / d - lmin);
    state.m = (1.0 - t) * state.m + (t / d) * Mat::Identity(d, d);
  }
  return state;
}

CVec random_pure_vector(int d, Rng& rng) {
  CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = cxd(rng.normal(), rng.normal());
  v /= v.norm();
  return v;
}

HermOp product_pure(int da, int db, Rng& rng) {
  CVec a = random_pure_vector(da, rng);
  CVec b = random_pure_vector(db, rng);
  CVec ab(da * db);
  for (int i = 0; i < da; ++i) ab.segment(i * db, db) = a(i) * b;
  return HermOp(da, db, ab * ab.adjoint());
}

std::vector<HermOp> random_povm(int k, int d, Rng& rng) {
  std::vector<Mat> raw;
  Mat sum = Mat::Zero(d, d);
  for (int i = 0; i < k; ++i) {
    Mat g = ginibre(d, d, rng);
    raw.push_back(g * g.adjoint());
    sum += raw.back();
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(hermitize(sum));
  Mat smh = es.eigenvectors() *
            es.eigenvalues().cwiseMax(1e-300).cwiseInverse().cwiseSqrt().asDiagonal() *
            es.eigenvectors().adjoint();
  std::vector<HermOp> out;
  out.reserve(k);
  for (int i = 0; i < k; ++i) out.emplace_back(d, 1, hermitize(smh * raw[i] * smh));
  return out;
}

}  // namespace qomega
