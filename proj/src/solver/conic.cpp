/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "solver/conic.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include <nlohmann/json.hpp>

namespace qomega {

int ConicProgram::add_block(BlockKind kind, int side) {
  if (side < 1) throw Error(Err::ContractViolation, "block side must be >= 1");
  if (kind == BlockKind::Nonneg && side != 1)
    throw Error(Err::ContractViolation, "nonneg blocks are scalars");
  blocks.push_back({kind, side});
  objective.push_back(RMat::Zero(side, side));
  for (auto& r : rows) r.push_back(RMat::Zero(side, side));
  return num_blocks() - 1;
}

int ConicProgram::add_row(double rhs_value) {
  rhs.conservativeResize(rhs.size() + 1);
  rhs(rhs.size() - 1) = rhs_value;
  rows.emplace_back();
  for (const auto& blk : blocks) rows.back().push_back(RMat::Zero(blk.side, blk.side));
  return num_rows() - 1;
}

void ConicProgram::obj_coeff(int block, const RMat& c) {
  auto& dst = objective.at(block);
  if (c.rows() != dst.rows() || c.cols() != dst.cols())
    throw Error(Err::ContractViolation, "objective coefficient has wrong side");
  dst += 0.5 * (c + c.transpose());
}

void ConicProgram::row_coeff(int row, int block, const RMat& a) {
  auto& dst = rows.at(row).at(block);
  if (a.rows() != dst.rows() || a.cols() != dst.cols())
    throw Error(Err::ContractViolation, "row coefficient has wrong side");
  dst += 0.5 * (a + a.transpose());
}

std::string ConicProgram::dump_json() const {
  nlohmann::json j;
  j["maximize"] = maximize;
  j["blocks"] = nlohmann::json::array();
  for (const auto& b : blocks)
    j["blocks"].push_back({{"kind", b.kind == BlockKind::PSD ? "psd" : "nonneg"}, {"side", b.side}});
  auto flat = [](const RMat& m) {
    std::vector<double> v(m.data(), m.data() + m.size());
    return v;
  };
  j["objective"] = nlohmann::json::array();
  for (const auto& c : objective) j["objective"].push_back(flat(c));
  j["equalities"] = nlohmann::json::array();
  for (int i = 0; i < num_rows(); ++i) {
    nlohmann::json row;
    row["rhs"] = rhs(i);
    row["coeffs"] = nlohmann::json::array();
    for (const auto& a : rows[i]) row["coeffs"].push_back(flat(a));
    j["equalities"].push_back(std::move(row));
  }
  return j.dump();
}

const char* status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::max_iters: return "max_iters";
  }
  return "unknown";
}

namespace {

double inner(const RMat& a, const RMat& b) { return (a.array() * b.array()).sum(); }

RMat symm(const RMat& m) { return 0.5 * (m + m.transpose()); }

// Sparse view of one constraint coefficient, used to keep the normal-matrix
// assembly cheap for basis-element rows.
struct SparseCoef {
  bool zero = true;
  bool use_sparse = false;
  std::vector<std::tuple<int, int, double>> trips;
  std::vector<int> cols;
};

SparseCoef analyze(const RMat& a) {
  SparseCoef out;
  const int s = static_cast<int>(a.rows());
  std::vector<char> colmask(s, 0);
  for (int c = 0; c < s; ++c)
    for (int r = 0; r < s; ++r)
      if (a(r, c) != 0.0) {
        out.trips.emplace_back(r, c, a(r, c));
        colmask[c] = 1;
        out.zero = false;
      }
  for (int c = 0; c < s; ++c)
    if (colmask[c]) out.cols.push_back(c);
  out.use_sparse = !out.zero && static_cast<int>(out.cols.size()) * 2 <= s;
  return out;
}

// T * A * T for one coefficient
RMat congruence(const RMat& t, const RMat& a, const SparseCoef& sc) {
  const int s = static_cast<int>(t.rows());
  if (sc.zero) return RMat::Zero(s, s);
  if (!sc.use_sparse) return t * a * t;
  RMat ta = RMat::Zero(s, s);
  for (const auto& [r, c, v] : sc.trips) ta.col(c) += v * t.col(r);
  RMat out = RMat::Zero(s, s);
  for (int c : sc.cols) out += ta.col(c) * t.row(c);
  return out;
}

double dot_coef(const RMat& a, const SparseCoef& sc, const RMat& full) {
  if (sc.zero) return 0.0;
  if (!sc.use_sparse) return inner(a, full);
  double acc = 0.0;
  for (const auto& [r, c, v] : sc.trips) acc += v * full(c, r);
  return acc;
}

// Largest step alpha with X + alpha*dX staying PSD.
double boundary_step(const RMat& x, const RMat& dx) {
  const int n = static_cast<int>(x.rows());
  Eigen::LLT<RMat> llt(x);
  double jitter = 1e-14 * std::max(1.0, x.trace() / n);
  for (int tries = 0; llt.info() != Eigen::Success && tries < 5; ++tries) {
    llt.compute(x + jitter * RMat::Identity(n, n));
    jitter *= 100.0;
  }
  if (llt.info() != Eigen::Success) return 0.0;
  RMat l = llt.matrixL();
  RMat ldx = l.triangularView<Eigen::Lower>().solve(dx);
  RMat z = l.triangularView<Eigen::Lower>().solve(ldx.transpose()).transpose();
  Eigen::SelfAdjointEigenSolver<RMat> es(symm(z), Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin >= -1e-13) return 1e100;
  return -1.0 / lmin;
}

}  // namespace

ConicSolution solve(const ConicProgram& p, double gap_tol) {
  SolveOptions opts;
  opts.gap_tol = gap_tol;
  return solve(p, opts);
}

namespace {

// One interior-point run from the scaled identity start xi_p * I, xi_d * I.
ConicSolution solve_once(const ConicProgram& p, const SolveOptions& opts, double xi_p,
                         double xi_d) {
  const int nb = p.num_blocks();
  const int m = p.num_rows();

  std::vector<RMat> cmat(nb);
  double cnorm = 0.0;
  for (int b = 0; b < nb; ++b) {
    cmat[b] = p.maximize ? RMat(-p.objective[b]) : p.objective[b];
    if (cmat[b].size() > 0) cnorm = std::max(cnorm, cmat[b].cwiseAbs().maxCoeff());
  }
  const double bnorm = p.rhs.cwiseAbs().maxCoeff();

  std::vector<std::vector<SparseCoef>> coef(m, std::vector<SparseCoef>(nb));
  for (int i = 0; i < m; ++i)
    for (int b = 0; b < nb; ++b) coef[i][b] = analyze(p.rows[i][b]);

  std::vector<RMat> X(nb), S(nb);
  double nu = 0.0;
  for (int b = 0; b < nb; ++b) {
    const int s = p.blocks[b].side;
    X[b] = xi_p * RMat::Identity(s, s);
    S[b] = xi_d * RMat::Identity(s, s);
    nu += s;
  }
  RVec y = RVec::Zero(m);

  auto apply_a = [&](const std::vector<RMat>& v) {
    RVec out(m);
    for (int i = 0; i < m; ++i) {
      double acc = 0.0;
      for (int b = 0; b < nb; ++b) acc += dot_coef(p.rows[i][b], coef[i][b], v[b]);
      out(i) = acc;
    }
    return out;
  };
  auto apply_at = [&](const RVec& w) {
    std::vector<RMat> out(nb);
    for (int b = 0; b < nb; ++b) {
      out[b] = RMat::Zero(p.blocks[b].side, p.blocks[b].side);
      for (int i = 0; i < m; ++i)
        if (w(i) != 0.0 && !coef[i][b].zero) out[b] += w(i) * p.rows[i][b];
    }
    return out;
  };

  SolveStatus status = SolveStatus::max_iters;
  int iter = 0;
  int stalls = 0;
  double pobj = 0.0, dobj = 0.0;

  for (; iter < opts.max_iters; ++iter) {
    RVec ax = apply_a(X);
    RVec rp = p.rhs - ax;
    std::vector<RMat> aty = apply_at(y);
    std::vector<RMat> rd(nb);
    double gap = 0.0;
    pobj = 0.0;
    for (int b = 0; b < nb; ++b) {
      rd[b] = cmat[b] - aty[b] - S[b];
      gap += inner(X[b], S[b]);
      pobj += inner(cmat[b], X[b]);
    }
    dobj = p.rhs.dot(y);
    const double mu = gap / nu;

    const double ftol = std::max(opts.gap_tol, 1e-9);
    double reld = 0.0;
    for (int b = 0; b < nb; ++b) reld = std::max(reld, rd[b].cwiseAbs().maxCoeff());
    const double relp = rp.cwiseAbs().maxCoeff() / (1.0 + bnorm);
    reld /= (1.0 + cnorm);
    const double relgap = std::abs(pobj - dobj) / (1.0 + std::max(std::abs(pobj), std::abs(dobj)));
    if (relp <= ftol && reld <= ftol && relgap <= opts.gap_tol) {
      status = SolveStatus::optimal;
      break;
    }

    // improving-ray certificates carried by the iterate itself
    if (dobj > 1e-10) {
      double vray = 0.0;
      for (int b = 0; b < nb; ++b) vray = std::max(vray, (aty[b] + S[b]).cwiseAbs().maxCoeff());
      if (vray <= opts.ray_tol * dobj) {
        status = SolveStatus::infeasible;
        break;
      }
    }
    if (pobj < -1e-10 && ax.cwiseAbs().maxCoeff() <= opts.ray_tol * (-pobj)) {
      status = SolveStatus::unbounded;
      break;
    }
    double xnorm = 0.0, dual_norm = y.squaredNorm();
    for (int b = 0; b < nb; ++b) {
      xnorm += X[b].squaredNorm();
      dual_norm += S[b].squaredNorm();
    }
    xnorm = std::sqrt(xnorm);
    dual_norm = std::sqrt(dual_norm);

    // Nesterov-Todd scaling point per block: T S T = X
    std::vector<RMat> T(nb), sinv(nb), trdt(nb);
    for (int b = 0; b < nb; ++b) {
      Eigen::SelfAdjointEigenSolver<RMat> ex(X[b]);
      if (ex.info() != Eigen::Success)
        throw Error(Err::NumericalBreakdown, "eigensolver failed at iteration " + std::to_string(iter));
      RVec lx = ex.eigenvalues().cwiseMax(1e-300);
      RMat xh = ex.eigenvectors() * lx.cwiseSqrt().asDiagonal() * ex.eigenvectors().transpose();
      RMat w = symm(xh * S[b] * xh);
      Eigen::SelfAdjointEigenSolver<RMat> ew(w);
      if (ew.info() != Eigen::Success)
        throw Error(Err::NumericalBreakdown, "eigensolver failed at iteration " + std::to_string(iter));
      RVec lw = ew.eigenvalues().cwiseMax(1e-300);
      RMat wmh = ew.eigenvectors() * lw.cwiseSqrt().cwiseInverse().asDiagonal() *
                 ew.eigenvectors().transpose();
      RMat winv = ew.eigenvectors() * lw.cwiseInverse().asDiagonal() * ew.eigenvectors().transpose();
      T[b] = symm(xh * wmh * xh);
      sinv[b] = symm(xh * winv * xh);
      trdt[b] = symm(congruence(T[b], rd[b], analyze(rd[b])));
    }

    // reduced normal matrix M_ij = sum_b <A_i, T A_j T>
    RMat nm = RMat::Zero(m, m);
    {
      std::vector<RMat> ta(nb);
      for (int j = 0; j < m; ++j) {
        for (int b = 0; b < nb; ++b)
          ta[b] = coef[j][b].zero ? RMat() : congruence(T[b], p.rows[j][b], coef[j][b]);
        for (int i = 0; i <= j; ++i) {
          double acc = 0.0;
          for (int b = 0; b < nb; ++b) {
            if (coef[j][b].zero || coef[i][b].zero) continue;
            acc += dot_coef(p.rows[i][b], coef[i][b], ta[b]);
          }
          nm(i, j) = acc;
          nm(j, i) = acc;
        }
      }
    }

    Eigen::LLT<RMat> chol;
    {
      const double mscale = std::max(nm.trace() / m, 1e-300);
      bool ok = false;
      for (double reg : {0.0, 1e-14, 1e-12, 1e-10, 1e-8}) {
        chol.compute(nm + reg * mscale * RMat::Identity(m, m));
        if (chol.info() == Eigen::Success) {
          ok = true;
          break;
        }
      }
      if (!ok)
        throw Error(Err::NumericalBreakdown,
                    "KKT system singular beyond regularization at iteration " + std::to_string(iter));
    }

    auto newton = [&](const std::vector<RMat>& rc) {
      RVec rhs(m);
      for (int i = 0; i < m; ++i) {
        double acc = rp(i);
        for (int b = 0; b < nb; ++b) {
          if (coef[i][b].zero) continue;
          acc -= dot_coef(p.rows[i][b], coef[i][b], rc[b]);
          acc += dot_coef(p.rows[i][b], coef[i][b], trdt[b]);
        }
        rhs(i) = acc;
      }
      RVec dy = chol.solve(rhs);
      std::vector<RMat> atdy = apply_at(dy);
      std::vector<RMat> ds(nb), dx(nb);
      for (int b = 0; b < nb; ++b) {
        ds[b] = rd[b] - atdy[b];
        dx[b] = symm(rc[b] - T[b] * ds[b] * T[b]);
      }
      return std::make_tuple(std::move(dy), std::move(dx), std::move(ds));
    };

    // predictor
    std::vector<RMat> rc(nb);
    for (int b = 0; b < nb; ++b) rc[b] = -X[b];
    auto [dya, dxa, dsa] = newton(rc);
    double ap = 1e100, ad = 1e100;
    for (int b = 0; b < nb; ++b) {
      ap = std::min(ap, boundary_step(X[b], dxa[b]));
      ad = std::min(ad, boundary_step(S[b], dsa[b]));
    }
    // Improving-ray certificates carried by the predictor direction: a conic
    // primal direction that preserves the equalities and strictly improves
    // the objective proves unboundedness, and its dual counterpart proves
    // infeasibility.  The Newton system puts the full residual into each
    // direction, so the normalized direction satisfies the ray equations up
    // to residual / magnitude; the magnitude floor keeps the vanishing
    // directions of a converged run from being misread as rays.
    if (ap >= 1e50) {
      double crate = 0.0, dnorm = 0.0;
      for (int b = 0; b < nb; ++b) {
        crate += inner(cmat[b], dxa[b]);
        dnorm += dxa[b].squaredNorm();
      }
      dnorm = std::sqrt(dnorm);
      if (dnorm >= 1.0 + xnorm && rp.cwiseAbs().maxCoeff() <= opts.ray_tol * dnorm &&
          crate < -opts.ray_tol * (1.0 + cnorm) * dnorm) {
        status = SolveStatus::unbounded;
        break;
      }
    }
    if (ad >= 1e50) {
      double rdnorm = 0.0;
      for (int b = 0; b < nb; ++b) rdnorm = std::max(rdnorm, rd[b].cwiseAbs().maxCoeff());
      double brate = p.rhs.dot(dya);
      double dnorm = dya.squaredNorm();
      for (int b = 0; b < nb; ++b) dnorm += dsa[b].squaredNorm();
      dnorm = std::sqrt(dnorm);
      if (dnorm >= 1.0 + dual_norm && rdnorm <= opts.ray_tol * dnorm &&
          brate > opts.ray_tol * (1.0 + bnorm) * dnorm) {
        status = SolveStatus::infeasible;
        break;
      }
    }
    ap = std::min(1.0, ap);
    ad = std::min(1.0, ad);
    double gap_aff = 0.0;
    for (int b = 0; b < nb; ++b) gap_aff += inner(X[b] + ap * dxa[b], S[b] + ad * dsa[b]);
    gap_aff = std::max(gap_aff, 0.0);

    // Short predictor steps make the affine gap estimate unreliable, so the
    // centering weight backs off toward 1 with the step size, and it is
    // floored while the residuals still dominate the gap: shrinking mu ahead
    // of feasibility strands the iterate at the cone boundary.
    const double resid = std::max(relp, reld);
    const double expon = std::max(1.0, 3.0 * std::min(ap, ad) * std::min(ap, ad));
    double sigma =
        std::clamp(std::pow(gap_aff / std::max(gap, 1e-300), expon), 1e-6, 1.0 - 1e-6);
    if (resid > relgap) sigma = std::max(sigma, 0.5);

    // corrector
    for (int b = 0; b < nb; ++b) rc[b] = sigma * mu * sinv[b] - X[b];
    auto [dy, dx, ds] = newton(rc);
    double bp = 1e100, bd = 1e100;
    for (int b = 0; b < nb; ++b) {
      bp = std::min(bp, boundary_step(X[b], dx[b]));
      bd = std::min(bd, boundary_step(S[b], ds[b]));
    }
    const double tau = resid > 1e-3 ? 0.9 : 0.98;
    double alphap = std::min(1.0, tau * bp);
    double alphad = std::min(1.0, tau * bd);
    // Unequal steps let one side race ahead while the other is still
    // infeasible; keep them locked together until the residuals are small.
    if (resid > 100.0 * ftol) alphap = alphad = std::min(alphap, alphad);
    if (alphap < 1e-9 && alphad < 1e-9) {
      if (++stalls >= 3) break;
    } else {
      stalls = 0;
    }
    for (int b = 0; b < nb; ++b) {
      X[b] = symm(X[b] + alphap * dx[b]);
      S[b] = symm(S[b] + alphad * ds[b]);
    }
    y += alphad * dy;
  }

  ConicSolution sol;
  sol.status = status;
  sol.iterations = iter;
  sol.x = std::move(X);
  sol.y = std::move(y);
  sol.s = std::move(S);
  pobj = 0.0;
  for (int b = 0; b < nb; ++b) pobj += inner(cmat[b], sol.x[b]);
  dobj = p.rhs.dot(sol.y);
  sol.duality_gap = std::abs(pobj - dobj);
  if (p.maximize) {
    sol.primal_value = -pobj;
    sol.dual_value = -dobj;
  } else {
    sol.primal_value = pobj;
    sol.dual_value = dobj;
  }
  return sol;
}

// Worst of the relative primal residual, dual residual, and duality gap,
// used to compare unconverged iterates across restarts.
double iterate_defect(const ConicProgram& p, const ConicSolution& sol) {
  const int nb = p.num_blocks();
  const int m = p.num_rows();
  double cnorm = 0.0;
  std::vector<RMat> cmat(nb);
  for (int b = 0; b < nb; ++b) {
    cmat[b] = p.maximize ? RMat(-p.objective[b]) : p.objective[b];
    if (cmat[b].size() > 0) cnorm = std::max(cnorm, cmat[b].cwiseAbs().maxCoeff());
  }
  const double bnorm = p.rhs.cwiseAbs().maxCoeff();
  double relp = 0.0;
  for (int i = 0; i < m; ++i) {
    double ax = 0.0;
    for (int b = 0; b < nb; ++b) ax += inner(p.rows[i][b], sol.x[b]);
    relp = std::max(relp, std::abs(ax - p.rhs(i)));
  }
  relp /= 1.0 + bnorm;
  double reld = 0.0;
  for (int b = 0; b < nb; ++b) {
    RMat rd = cmat[b] - sol.s[b];
    for (int i = 0; i < m; ++i)
      if (sol.y(i) != 0.0) rd -= sol.y(i) * p.rows[i][b];
    reld = std::max(reld, rd.cwiseAbs().maxCoeff());
  }
  reld /= 1.0 + cnorm;
  const double relgap =
      sol.duality_gap /
      (1.0 + std::max(std::abs(sol.primal_value), std::abs(sol.dual_value)));
  return std::max({relp, reld, relgap});
}

}  // namespace

ConicSolution solve(const ConicProgram& p, const SolveOptions& opts) {
  const int nb = p.num_blocks();
  if (nb == 0) throw Error(Err::ContractViolation, "program declares no blocks");
  if (p.num_rows() == 0)
    throw Error(Err::ContractViolation, "program declares no equality rows");
  if (!(opts.gap_tol >= 1e-10 && opts.gap_tol <= 1e-4))
    throw Error(Err::ContractViolation, "gap_tol outside [1e-10, 1e-4]");

  double cnorm = 0.0;
  for (int b = 0; b < nb; ++b)
    if (p.objective[b].size() > 0)
      cnorm = std::max(cnorm, p.objective[b].cwiseAbs().maxCoeff());
  double xi_p = std::max(1.0, p.rhs.cwiseAbs().maxCoeff());
  double xi_d = std::max(1.0, cnorm);

  // When the optimal iterate lives at a much larger scale than the start, the
  // run can exhaust its iterations against the cone boundary; restart from a
  // centered point at the scale the failed iterate reached.
  ConicSolution best;
  double best_defect = 0.0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    ConicSolution sol = solve_once(p, opts, xi_p, xi_d);
    if (sol.status != SolveStatus::max_iters) return sol;
    const double defect = iterate_defect(p, sol);
    double xs = 1.0, ss = 1.0;
    for (const auto& xb : sol.x) xs = std::max(xs, xb.cwiseAbs().maxCoeff());
    for (const auto& sb : sol.s) ss = std::max(ss, sb.cwiseAbs().maxCoeff());
    if (attempt == 0 || defect < best_defect) {
      best_defect = defect;
      best = std::move(sol);
    }
    if (defect <= 100.0 * std::max(opts.gap_tol, 1e-9)) break;
    if (xs <= 1.5 * xi_p && ss <= 1.5 * xi_d) break;
    xi_p = std::max(xi_p, 2.0 * xs);
    xi_d = std::max(xi_d, 2.0 * ss);
  }
  return best;
}

}  // namespace qomega
