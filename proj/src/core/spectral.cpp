/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "core/spectral.hpp"

#include <cmath>

namespace qomega {

Mat SpectralDecomposition::projector(int k) const {
  const Cluster& c = clusters.at(k);
  Mat block = eigenvectors.middleCols(c.begin, c.size());
  return block * block.adjoint();
}

SpectralDecomposition eig_hermitian(const HermOp& h) {
  const double dev = (h.m - h.m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermTol)
    throw Error(Err::InvalidOperator, "eig_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(h.m);
  if (es.info() != Eigen::Success)
    throw Error(Err::NumericalBreakdown, "eig_hermitian: eigensolver failed");

  const int d = h.dim();
  SpectralDecomposition out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  for (int i = 0; i < d; ++i) {  // Eigen sorts ascending; flip to descending
    out.eigenvalues(i) = es.eigenvalues()(d - 1 - i);
    out.eigenvectors.col(i) = es.eigenvectors().col(d - 1 - i);
  }

  const double scale = std::max(out.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
  const double tol = kSpecTol * scale;
  int begin = 0;
  for (int i = 1; i <= d; ++i) {
    if (i == d || std::abs(out.eigenvalues(i) - out.eigenvalues(begin)) > tol) {
      double mean = out.eigenvalues.segment(begin, i - begin).mean();
      out.clusters.push_back({mean, begin, i});
      begin = i;
    }
  }
  return out;
}

HermOp pseudo_power(const HermOp& h, double p) {
  SpectralDecomposition s = eig_hermitian(h);
  const double thr = kSupportTol * std::max(s.eigenvalues.cwiseAbs().maxCoeff(), 1e-300);
  Mat out = Mat::Zero(h.dim(), h.dim());
  for (int i = 0; i < h.dim(); ++i) {
    const double l = s.eigenvalues(i);
    if (l > thr) out += std::pow(l, p) * (s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint());
  }
  return HermOp(h.da, h.db, std::move(out));
}

}  // namespace qomega
