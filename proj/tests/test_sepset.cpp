/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "core/sampling.hpp"
#include "core/states.hpp"
#include "div/divergence.hpp"
#include "sep/ascent.hpp"
#include "sep/sepset.hpp"
#include "sep/werner.hpp"
#include "util.hpp"

using namespace qomega;

namespace {

const double kLog3 = std::log2(3.0);

// Frozen literal inputs mirrored entry by entry in tests/oracles/sepset_oracle.py.
HermOp frozen_r1() {
  Mat l(4, 4);
  l << cxd(1.0, 0), cxd(0, 0), cxd(0, 0), cxd(0, 0),
      cxd(0.5, 0), cxd(1.2, 0), cxd(0, 0), cxd(0, 0),
      cxd(0.2, 0.1), cxd(0.3, 0), cxd(0.9, 0), cxd(0, 0),
      cxd(0.1, 0), cxd(0.2, -0.2), cxd(0.4, 0), cxd(1.1, 0);
  Mat g = l * l.adjoint();
  Mat m = 0.5 * max_entangled(2).m + (0.5 / g.trace().real()) * g;
  return HermOp(2, 2, hermitize(m));
}

HermOp frozen_r2() {
  Mat l = Mat::Zero(6, 6);
  l(0, 0) = 1.0;
  l(1, 0) = 0.2;
  l(1, 1) = 0.9;
  l(2, 0) = cxd(0.0, 0.1);
  l(2, 1) = 0.3;
  l(2, 2) = 1.1;
  l(3, 0) = 0.2;
  l(3, 1) = cxd(0.1, -0.1);
  l(3, 3) = 0.8;
  l(4, 1) = 0.2;
  l(4, 2) = 0.1;
  l(4, 3) = 0.3;
  l(4, 4) = 1.0;
  l(5, 0) = 0.1;
  l(5, 2) = cxd(0.0, 0.2);
  l(5, 3) = 0.1;
  l(5, 4) = 0.2;
  l(5, 5) = 0.9;
  Mat g = l * l.adjoint();
  CVec v = CVec::Zero(6);
  v[0] = 1.0 / std::sqrt(2.0);
  v[4] = 1.0 / std::sqrt(2.0);
  Mat m = 0.5 * (v * v.adjoint()) + (0.5 / g.trace().real()) * g;
  return HermOp(2, 3, hermitize(m));
}

HermOp frozen_m1() {
  Mat l(4, 4);
  l << cxd(1.0, 0), cxd(0, 0), cxd(0, 0), cxd(0, 0),
      cxd(0.4, 0), cxd(0.9, 0), cxd(0, 0), cxd(0, 0),
      cxd(0.1, 0.3), cxd(0.2, 0), cxd(1.1, 0), cxd(0, 0),
      cxd(-0.2, 0), cxd(0.1, -0.1), cxd(0.3, 0), cxd(0.8, 0);
  return HermOp(2, 2, hermitize(l * l.adjoint()));
}

HermOp frozen_n1() {
  Mat l(4, 4);
  l << cxd(0.9, 0), cxd(0, 0), cxd(0, 0), cxd(0, 0),
      cxd(0.1, -0.2), cxd(1.2, 0), cxd(0, 0), cxd(0, 0),
      cxd(0.3, 0), cxd(-0.1, 0), cxd(0.7, 0), cxd(0, 0),
      cxd(0.0, 0), cxd(0.2, 0.1), cxd(-0.3, 0), cxd(1.0, 0);
  return HermOp(2, 2, hermitize(l * l.adjoint()));
}

double trace_with(const HermOp& op, const HermOp& state) {
  return (op.m * state.m).trace().real();
}

// Objective of a one-product candidate, recomputed from its stored factors.
double certificate_ratio(const SeparableCandidate& c, const HermOp& m, const HermOp& n) {
  REQUIRE(c.size() == 1);
  HermOp pr = c.state();
  return trace_with(m, pr) / trace_with(n, pr);
}

}  // namespace

TEST_CASE("partial-transpose criterion classifies the standard examples") {
  CHECK_FALSE(is_ppt(max_entangled(2)));
  CHECK(partial_transpose(max_entangled(2)).min_eig() == doctest::Approx(-0.5).epsilon(1e-12));

  Rng rng(5);
  CHECK(is_ppt(product_pure(2, 3, rng)));
  CHECK(is_ppt(identity_op(2, 2) * 0.25));

  CHECK(is_ppt(werner_state(0.5, 2)));
  CHECK_FALSE(is_ppt(werner_state(0.49, 2)));
}

TEST_CASE("flip-projector ratio brackets three and proportional pairs collapse") {
  // sup tr(Psi_2 x)/tr(tau x) over products: overlap with Psi_2 maxes at 1/2.
  // Cross-checked in tests/oracles/sepset_oracle.py (ascent = ppt = 3).
  HermOp m = max_entangled(2);
  HermOp n = mes_complement(2);
  Bracket br = sep_sup_ratio(m, n);
  CHECK(br.lower == doctest::Approx(3.0).epsilon(1e-7));
  CHECK(br.upper == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(br.lower <= br.upper + 1e-9);

  REQUIRE(br.candidate.has_value());
  const SeparableCandidate& cert = *br.candidate;
  CHECK(std::abs(cert.factors_a[0].norm() - 1.0) <= 1e-12);
  CHECK(std::abs(cert.factors_b[0].norm() - 1.0) <= 1e-12);
  CHECK(std::abs(certificate_ratio(cert, m, n) - br.lower) <= 1e-9 * (1.0 + br.lower));

  HermOp scaled = n * 2.5;
  Bracket coll = sep_sup_ratio(scaled, n);
  CHECK(coll.lower == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(coll.upper == doctest::Approx(2.5).epsilon(1e-6));
}

TEST_CASE("ratio brackets close at two qubits on a seeded corpus") {
  // PPT = Sep at 2x2, so ascent and the outer program must agree.
  int tight = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(900 + seed);
    HermOp m = full_rank_state(4, rng).with_cut(2, 2);
    HermOp n = full_rank_state(4, rng).with_cut(2, 2);
    Bracket br = sep_sup_ratio(m, n);
    CHECK(br.lower <= br.upper + 1e-9);
    CHECK(br.upper - br.lower <= 1e-6 * (1.0 + br.upper));
    if (br.upper - br.lower <= 1e-6 * (1.0 + br.upper)) ++tight;

    REQUIRE(br.candidate.has_value());
    CHECK(std::abs(certificate_ratio(*br.candidate, m, n) - br.lower) <=
          1e-9 * (1.0 + std::abs(br.lower)));
  }
  CHECK(tight == 50);

  // Frozen pair value 3.551909602 from tests/oracles/sepset_oracle.py.
  Bracket fr = sep_sup_ratio(frozen_m1(), frozen_n1());
  CHECK(fr.lower == doctest::Approx(3.551909602).epsilon(1e-6));
  CHECK(fr.upper == doctest::Approx(3.551909602).epsilon(1e-6));
}

TEST_CASE("ratio hits the infinity branch on orthogonal supports") {
  Mat m00 = Mat::Zero(4, 4);
  m00(0, 0) = 1.0;
  Mat m11 = Mat::Zero(4, 4);
  m11(3, 3) = 1.0;
  Bracket br = sep_sup_ratio(HermOp(2, 2, m00), HermOp(2, 2, m11));
  CHECK(std::isinf(br.lower));
  CHECK(std::isinf(br.upper));
  REQUIRE(br.candidate.has_value());
  HermOp pr = br.candidate->state();
  CHECK(trace_with(HermOp(2, 2, m11), pr) <= 1e-9);
  CHECK(trace_with(HermOp(2, 2, m00), pr) >= 0.9);

  Mat neg = Mat::Identity(4, 4);
  neg(3, 3) = -0.5;
  CHECK_THROWS_AS((void)sep_sup_ratio(HermOp(2, 2, neg), HermOp(2, 2, m11)), Error);
}

TEST_CASE("projective distance to separability brackets werner and trivial states") {
  // Werner p = 1/4: value log2(3), attained at the separable boundary state.
  Bracket w = d_omega_sep(werner_state(0.25, 2));
  CHECK(w.lower <= kLog3 + 1e-9);
  CHECK(w.upper >= kLog3 - 1e-9);
  CHECK(w.upper - w.lower <= 1e-5);
  REQUIRE(w.candidate.has_value());
  REQUIRE(w.witness.has_value());

  // Separable side of the family: the distance vanishes.
  Bracket s = d_omega_sep(werner_state(0.6, 2));
  CHECK(s.lower >= 0.0);
  CHECK(s.upper <= 1e-6);

  // Full-rank product state: the marginal candidate reproduces it exactly.
  Rng rng(41);
  HermOp prod = tensor(full_rank_state(2, rng), full_rank_state(2, rng)).with_cut(2, 2);
  Bracket p = d_omega_sep(prod);
  CHECK(p.lower >= 0.0);
  CHECK(p.lower <= 1e-6);
  CHECK(p.upper <= 1e-6);

  // Pure entangled state: no separable state shares its support.
  Bracket e = d_omega_sep(max_entangled(2));
  CHECK(std::isinf(e.upper));
  CHECK(std::isinf(e.lower));
  CHECK_FALSE(e.candidate.has_value());
}

TEST_CASE("frozen entangled states match the independent relaxation values") {
  // log2 values 0.853225342 (R1) and 1.451206958 (R2) from
  // tests/oracles/sepset_oracle.py, where the decomposable dual and a
  // feasibility bisection agree to nine digits.
  const double v1 = 0.853225342;
  const double v2 = 1.451206958;

  Bracket d1 = d_omega_ppt_dual(frozen_r1());
  CHECK(d1.lower == doctest::Approx(v1).epsilon(1e-6));
  CHECK(d1.upper == doctest::Approx(v1).epsilon(1e-6));
  REQUIRE(d1.witness.has_value());
  // The witness pair is feasible for the dual: PSD, normalized on the state.
  CHECK(d1.witness->first.min_eig() >= -1e-8);
  CHECK(d1.witness->second.min_eig() >= -1e-8);
  CHECK(trace_with(d1.witness->second, frozen_r1()) == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(trace_with(d1.witness->first, frozen_r1()) ==
        doctest::Approx(std::exp2(v1)).epsilon(1e-5));

  Bracket b1 = d_omega_ppt_bisect(frozen_r1());
  CHECK(b1.lower <= v1 + 1e-9);
  CHECK(b1.upper >= v1 - 1e-9);
  CHECK(b1.upper - b1.lower <= 1.5e-6);
  REQUIRE(b1.ppt_state.has_value());
  CHECK(b1.ppt_state->min_eig() >= -1e-7);
  CHECK(partial_transpose(*b1.ppt_state).min_eig() >= -1e-7);

  Bracket f1 = d_omega_sep(frozen_r1());
  CHECK(f1.lower <= v1 + 2e-6);
  CHECK(f1.upper >= v1 - 2e-6);
  CHECK(f1.upper - f1.lower <= 1e-5);

  Bracket f2 = d_omega_sep(frozen_r2());
  CHECK(f2.lower <= v2 + 2e-6);
  CHECK(f2.upper >= v2 - 2e-6);
  CHECK(f2.upper - f2.lower <= 1e-5);
}

TEST_CASE("werner and isotropic family projections round trip") {
  CHECK(werner_family(werner_state(0.3, 2)).p == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(werner_family(werner_state(0.85, 3)).p == doctest::Approx(0.85).epsilon(1e-12));

  // tr(F I/d^2) = 1/d, so the maximally mixed state sits at p = (d+1)/(2d);
  // values 0.75 (d=2) and 2/3 (d=3) from tests/oracles/sepset_oracle.py.
  CHECK(werner_family(identity_op(2, 2) * 0.25).p == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(werner_family(identity_op(3, 3) * (1.0 / 9.0)).p ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK(isotropic_family(max_entangled(2)).overlap == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(isotropic_family(isotropic_state(0.3, 2)).overlap ==
        doctest::Approx(0.3).epsilon(1e-12));
  CHECK(isotropic_family(isotropic_state(0.7, 3)).overlap ==
        doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS((void)werner_family(qtest::bipartite_state(2, 3, 9)), Error);
}

TEST_CASE("werner closed form carries its witness") {
  WernerSepValue v = werner_domega_sep(0.25, 2);
  CHECK(v.value.finite);
  CHECK(v.value.value == doctest::Approx(kLog3).epsilon(1e-12));
  REQUIRE(v.witness.has_value());
  HermOp rho = werner_state(0.25, 2);
  CHECK(trace_with(v.witness->first, rho) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(trace_with(v.witness->second, rho) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qtest::max_abs_diff(v.witness->first.m, antisym_projector(2).m * 4.0) <= 1e-12);

  CHECK(werner_domega_sep(0.5, 2).value.value == doctest::Approx(0.0));
  CHECK_FALSE(werner_domega_sep(0.5, 2).witness.has_value());
  CHECK(werner_domega_sep(0.75, 2).value.value == doctest::Approx(0.0));
  CHECK(werner_domega_sep(1.0, 2).value.value == doctest::Approx(0.0));
  CHECK(werner_domega_sep(0.05, 2).value.value ==
        doctest::Approx(std::log2(19.0)).epsilon(1e-12));

  WernerSepValue zero = werner_domega_sep(0.0, 2);
  CHECK_FALSE(zero.value.finite);
  CHECK(std::isinf(zero.value.value));

  CHECK_THROWS_AS((void)werner_domega_sep(1.2, 2), Error);
}

TEST_CASE("tensor power witnesses stay valid and reproduce per-copy values") {
  const double p = 0.25;
  HermOp rho = werner_state(p, 2);

  auto [a1, b1] = werner_witness_tensor(p, 2, 1);
  CHECK(trace_with(a1, rho) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(trace_with(b1, rho) == doctest::Approx(1.0).epsilon(1e-12));
  // (B - A)^{T_B} = (1/p) 2 Psi_2, eigenvalues {8, 0, 0, 0}; elementwise
  // identity F^{T_B} = 2 Psi_2 checked in tests/oracles/sepset_oracle.py.
  CHECK(qtest::max_abs_diff(partial_transpose(b1 - a1).m, max_entangled(2).m * 8.0) <= 1e-12);

  auto [a2, b2] = werner_witness_tensor(p, 2, 2);
  HermOp rho2 = tensor_copies(rho, 2);
  CHECK(trace_with(a2, rho2) == doctest::Approx(9.0).epsilon(1e-10));
  CHECK(trace_with(b2, rho2) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(0.5 * std::log2(trace_with(a2, rho2)) == doctest::Approx(kLog3).epsilon(1e-10));
  CHECK(partial_transpose(b2 - a2).min_eig() >= -1e-9);

  auto [a3, b3] = werner_witness_tensor(p, 2, 3);
  HermOp rho3 = tensor_copies(rho, 3);
  CHECK(trace_with(a3, rho3) == doctest::Approx(27.0).epsilon(1e-9));
  CHECK(partial_transpose(b3 - a3).min_eig() >= -1e-9);

  CHECK_THROWS_AS((void)werner_witness_tensor(p, 2, 4), Error);
  CHECK_THROWS_AS((void)werner_witness_tensor(0.5, 2, 1), Error);
}

TEST_CASE("separable brackets sandwich on random states at both small dimensions") {
  // PPT = Sep at 2x2 and 2x3, so lower and upper must meet to 1e-5.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Bracket br = d_omega_sep(qtest::bipartite_state(2, 2, 300 + seed));
    CHECK(br.lower <= br.upper + 1e-9);
    CHECK(br.upper - br.lower <= 1e-5);
  }
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Bracket br = d_omega_sep(qtest::bipartite_state(2, 3, 400 + seed));
    CHECK(br.lower <= br.upper + 1e-9);
    CHECK(br.upper - br.lower <= 1e-5);
  }
}

TEST_CASE("inner certificates attain the upper bound") {
  for (std::uint64_t seed : {301, 403}) {
    int da = seed < 400 ? 2 : 2;
    int db = seed < 400 ? 2 : 3;
    HermOp rho = qtest::bipartite_state(da, db, seed);
    Bracket br = d_omega_sep(rho);
    REQUIRE(br.candidate.has_value());
    HermOp mix = br.candidate->state();
    for (double w : br.candidate->weights) CHECK(w >= 0.0);
    DivergenceValue direct = d_omega(rho * (1.0 / rho.trace()), mix);
    CHECK(direct.finite);
    CHECK(std::abs(direct.value - br.upper) <= 1e-8);
  }
}

TEST_CASE("twirling a state does not raise its separable distance") {
  // The family twirl is realizable with local operations and shared
  // randomness, so the distance to separability cannot grow.
  std::vector<HermOp> states;
  Mat singlet = Mat::Zero(4, 4);
  singlet(1, 1) = 0.5;
  singlet(2, 2) = 0.5;
  singlet(1, 2) = -0.5;
  singlet(2, 1) = -0.5;
  states.push_back(HermOp(2, 2, 0.6 * singlet + 0.1 * Mat::Identity(4, 4)));
  states.push_back(qtest::bipartite_state(2, 2, 71));
  states.push_back(qtest::bipartite_state(2, 2, 72));

  for (const HermOp& rho : states) {
    const double p = werner_family(rho).p;
    HermOp twirled = werner_state(std::clamp(p, 0.0, 1.0), 2);
    Bracket orig = d_omega_sep(rho);
    Bracket tw = d_omega_sep(twirled);
    CHECK(tw.upper <= orig.upper + 1e-6);
  }
}

TEST_CASE("werner grid points stay inside their separable brackets") {
  for (int i = 1; i <= 9; ++i) {
    const double p = i / 10.0;
    Bracket br = d_omega_sep(werner_state(p, 2));
    const double closed = werner_domega_sep(p, 2).value.value;
    CHECK(br.lower <= closed + 1e-9);
    CHECK(br.upper >= closed - 1e-9);
  }
}
