/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "core/states.hpp"

namespace qomega {

HermOp swap_op(int d) {
  Mat f = Mat::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) f(j * d + i, i * d + j) = 1.0;
  return HermOp(d, d, std::move(f));
}

HermOp sym_projector(int d) {
  HermOp f = swap_op(d);
  return HermOp(d, d, 0.5 * (Mat::Identity(d * d, d * d) + f.m));
}

HermOp antisym_projector(int d) {
  HermOp f = swap_op(d);
  return HermOp(d, d, 0.5 * (Mat::Identity(d * d, d * d) - f.m));
}

HermOp max_entangled(int m) {
  CVec psi = CVec::Zero(m * m);
  for (int i = 0; i < m; ++i) psi(i * m + i) = 1.0 / std::sqrt(static_cast<double>(m));
  return HermOp(m, m, psi * psi.adjoint());
}

HermOp mes_complement(int m) {
  if (m < 2) throw Error(Err::InvalidOperator, "mes_complement requires m >= 2");
  HermOp psi = max_entangled(m);
  return HermOp(m, m, (Mat::Identity(m * m, m * m) - psi.m) / (double(m) * m - 1.0));
}

HermOp werner_state(double p, int d) {
  if (p < 0.0 || p > 1.0) throw Error(Err::InvalidOperator, "werner_state: p outside [0,1]");
  HermOp ps = sym_projector(d), pa = antisym_projector(d);
  const double ts = ps.trace(), ta = pa.trace();
  return ps * (p / ts) + pa * ((1.0 - p) / ta);
}

HermOp isotropic_state(double f, int m) {
  if (f < 0.0 || f > 1.0) throw Error(Err::InvalidOperator, "isotropic_state: f outside [0,1]");
  return max_entangled(m) * f + mes_complement(m) * (1.0 - f);
}

}  // namespace qomega
