/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "core/sampling.hpp"
#include "core/states.hpp"
#include "solver/bisect.hpp"
#include "solver/conic.hpp"
#include "solver/hermprog.hpp"
#include "util.hpp"

using namespace qomega;

namespace {

// Margin-maximizing feasibility query: does a PPT cone element sigma exist
// with sigma <= rho <= lambda*sigma?
FeasibilityCheck ppt_omega_feasible(const HermOp& rho, double lambda) {
  const int d = rho.dim();
  LmiProgram prog;
  std::vector<int> vars;
  for (int k = 0; k < d * d; ++k) vars.push_back(prog.add_var(0.0));
  const int tvar = prog.add_var(1.0);

  const int l_psd = prog.add_lmi(d);
  const int l_ppt = prog.add_lmi(d);
  const int l_low = prog.add_lmi(d);
  const int l_high = prog.add_lmi(d);
  const Mat id = Mat::Identity(d, d);

  auto basis = herm_basis(d);
  HermOp shaped = rho;  // carries the cut for partial transposes
  for (int k = 0; k < d * d; ++k) {
    HermOp bk(rho.da, rho.db, basis[k]);
    prog.set_coef(l_psd, vars[k], -basis[k]);
    prog.set_coef(l_ppt, vars[k], -partial_transpose(bk).m);
    prog.set_coef(l_low, vars[k], basis[k]);
    prog.set_coef(l_high, vars[k], -lambda * basis[k]);
  }
  for (int l : {l_psd, l_ppt, l_low, l_high}) prog.set_coef(l, tvar, id);
  prog.set_const(l_low, shaped.m);
  prog.set_const(l_high, -shaped.m);

  ConicSolution sol = solve(prog.lower(), 1e-8);
  FeasibilityCheck fc;
  fc.margin = prog.objective_value(sol);
  fc.feasible = sol.status == SolveStatus::optimal && fc.margin >= -1e-9;
  return fc;
}

}  // namespace

TEST_CASE("scalar and matrix toy programs hit their optima") {
  // max tr X s.t. tr X = 1, X >= 0 (side 2)
  {
    ConicProgram p;
    int b = p.add_block(BlockKind::PSD, 2);
    p.maximize = true;
    p.obj_coeff(b, RMat::Identity(2, 2));
    int r = p.add_row(1.0);
    p.row_coeff(r, b, RMat::Identity(2, 2));
    ConicSolution sol = solve(p, 1e-8);
    CHECK(sol.status == SolveStatus::optimal);
    CHECK(sol.primal_value == doctest::Approx(1.0).epsilon(1e-6));
  }
  // max <diag(1,0), X> s.t. tr X = 1 -> 1 attained at |0><0|
  {
    ConicProgram p;
    int b = p.add_block(BlockKind::PSD, 2);
    p.maximize = true;
    RMat c = RMat::Zero(2, 2);
    c(0, 0) = 1.0;
    p.obj_coeff(b, c);
    int r = p.add_row(1.0);
    p.row_coeff(r, b, RMat::Identity(2, 2));
    ConicSolution sol = solve(p, 1e-8);
    CHECK(sol.status == SolveStatus::optimal);
    CHECK(sol.primal_value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sol.x[0](0, 0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(sol.x[0](1, 1) == doctest::Approx(0.0).epsilon(1e-5));
  }
}

TEST_CASE("largest-ratio program matches the closed form (real and rotated)") {
  // max tr(rho X) s.t. tr(sigma X) <= 1, X >= 0 equals 2^D_max(rho, sigma)
  auto run = [](const Mat& rho, const Mat& sigma) {
    HermProgram hp;
    int x = hp.add_psd(static_cast<int>(rho.rows()));
    int slack = hp.add_scalar();
    hp.set_maximize(true);
    hp.objective(x, rho);
    int r = hp.add_row(1.0);
    hp.coeff(r, x, sigma);
    hp.coeff_scalar(r, slack, 1.0);
    ConicSolution sol = solve(hp.lower(), 1e-8);
    REQUIRE(sol.status == SolveStatus::optimal);
    return sol.primal_value;
  };

  Mat rho(2, 2);
  rho << 0.75, 0, 0, 0.25;
  Mat half = 0.5 * Mat::Identity(2, 2);
  CHECK(run(rho, half) == doctest::Approx(1.5).epsilon(1e-6));

  Rng rng(21);
  Mat u = haar_unitary(2, rng);
  CHECK(run(hermitize(u * rho * u.adjoint()), half) == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("improving rays classify infeasible and unbounded programs") {
  // tr X = -1 with X >= 0 is infeasible
  {
    ConicProgram p;
    int b = p.add_block(BlockKind::PSD, 2);
    int r = p.add_row(-1.0);
    p.row_coeff(r, b, RMat::Identity(2, 2));
    ConicSolution sol = solve(p, 1e-8);
    CHECK(sol.status == SolveStatus::infeasible);
  }
  // maximize tr(diag(1,0) X) with only an irrelevant equality is unbounded
  {
    ConicProgram p;
    int b = p.add_block(BlockKind::PSD, 2);
    p.maximize = true;
    RMat c = RMat::Zero(2, 2);
    c(0, 0) = 1.0;
    p.obj_coeff(b, c);
    RMat pin = RMat::Zero(2, 2);
    pin(1, 1) = 1.0;
    int r = p.add_row(1.0);
    p.row_coeff(r, b, pin);
    ConicSolution sol = solve(p, 1e-8);
    CHECK(sol.status == SolveStatus::unbounded);
  }
}

TEST_CASE("weak duality, scale invariance, determinism on a random corpus") {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng(1000 + trial);
    ConicProgram p;
    int b = p.add_block(BlockKind::PSD, 3);
    p.maximize = (trial % 2 == 0);
    RMat c(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c(i, j) = rng.normal();
    p.obj_coeff(b, 0.5 * (c + c.transpose()));
    int r0 = p.add_row(1.0);
    p.row_coeff(r0, b, RMat::Identity(3, 3));
    RMat a(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = rng.normal();
    a = 0.5 * (a + a.transpose());
    // rhs chosen from a strictly feasible point so the program is solvable
    RMat x0 = RMat::Identity(3, 3) / 3.0;
    int r1 = p.add_row((a.array() * x0.array()).sum());
    p.row_coeff(r1, b, a);

    ConicSolution sol = solve(p, 1e-8);
    REQUIRE(sol.status == SolveStatus::optimal);
    const double slack = 1e-8 * (1.0 + std::abs(sol.primal_value));
    if (p.maximize)
      CHECK(sol.primal_value <= sol.dual_value + slack);
    else
      CHECK(sol.dual_value <= sol.primal_value + slack);
    for (const auto& blk : sol.x) {
      Eigen::SelfAdjointEigenSolver<RMat> es(blk, Eigen::EigenvaluesOnly);
      CHECK(es.eigenvalues().minCoeff() >= -1e-8);
    }

    // scale all equality rows and rhs by 10: same status
    ConicProgram q = p;
    q.rhs *= 10.0;
    for (auto& row : q.rows)
      for (auto& mat : row) mat *= 10.0;
    CHECK(solve(q, 1e-8).status == SolveStatus::optimal);

    // determinism
    ConicSolution sol2 = solve(p, 1e-8);
    CHECK(sol2.status == sol.status);
    CHECK(std::abs(sol2.primal_value - sol.primal_value) <= 1e-12);
    CHECK(std::abs(sol2.dual_value - sol.dual_value) <= 1e-12);
  }
}

TEST_CASE("gap_tol domain is enforced") {
  ConicProgram p;
  int b = p.add_block(BlockKind::PSD, 2);
  int r = p.add_row(1.0);
  p.row_coeff(r, b, RMat::Identity(2, 2));
  CHECK_THROWS_AS(solve(p, 1e-3), Error);
  CHECK_THROWS_AS(solve(p, 1e-11), Error);
}

TEST_CASE("lmi margin programs report their optimum") {
  // max t s.t. diag(2,5) - t I >= 0  ->  t = 2
  LmiProgram prog;
  int t = prog.add_var(1.0);
  int l = prog.add_lmi(2);
  Mat a(2, 2);
  a << 2, 0, 0, 5;
  prog.set_const(l, a);
  prog.set_coef(l, t, Mat::Identity(2, 2));
  ConicSolution sol = solve(prog.lower(), 1e-8);
  REQUIRE(sol.status == SolveStatus::optimal);
  CHECK(prog.objective_value(sol) == doctest::Approx(2.0).epsilon(1e-6));
  auto slacks = prog.lift_slacks(sol);
  Eigen::SelfAdjointEigenSolver<Mat> es(slacks[0], Eigen::EigenvaluesOnly);
  CHECK(es.eigenvalues().minCoeff() >= -1e-7);
}

TEST_CASE("bisection contracts") {
  // constant-feasible oracle collapses onto lo
  auto always = [](double) { return FeasibilityCheck{true, 1.0}; };
  BisectBracket b1 = bisect_feasible(always, 0.0, 1.0, 1e-6);
  CHECK(b1.upper - b1.lower <= 1e-6);
  CHECK(b1.upper <= 1e-5);

  // synthetic threshold at 3
  auto step = [](double x) { return FeasibilityCheck{x >= 3.0, x - 3.0}; };
  BisectBracket b2 = bisect_feasible(step, 0.0, 8.0, 1e-6);
  CHECK(b2.upper - b2.lower <= 1e-6);
  CHECK(b2.lower <= 3.0);
  CHECK(b2.upper >= 3.0);

  // infeasible top endpoint
  auto never = [](double) { return FeasibilityCheck{false, -1.0}; };
  CHECK_THROWS_AS(bisect_feasible(never, 0.0, 1.0, 1e-3), Error);
}

TEST_CASE("Werner state projective-metric bisection over PPT brackets log2(3)") {
  HermOp rho = werner_state(0.25);
  auto oracle = [&](double loglam) { return ppt_omega_feasible(rho, std::exp2(loglam)); };
  // condition-number upper endpoint: log2(lmax/lmin) = log2(9)
  BisectBracket br = bisect_feasible(oracle, 0.0, std::log2(9.0) + 0.1, 1e-6);
  const double expect = std::log2(3.0);
  CHECK(br.lower <= expect + 1e-6);
  CHECK(br.upper >= expect - 1e-6);
  CHECK(br.upper - br.lower <= 1e-6);
  CHECK(std::abs(0.5 * (br.lower + br.upper) - expect) <= 5e-5);
}
