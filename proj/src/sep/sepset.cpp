/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "sep/sepset.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/states.hpp"
#include "div/divergence.hpp"
#include "sep/ascent.hpp"
#include "solver/bisect.hpp"
#include "solver/hermprog.hpp"

namespace qomega {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Tolerant feasibility verdict: misreading a boundary level as feasible only
// lowers the returned upper end, never invalidates the lower bound.
constexpr double kFeasSlack = -1e-9;
// Certified bracket ends retreat by the solver's terminal accuracy, so an
// exactly evaluated inner point can never undercut the reported outer bound.
constexpr double kValueSlack = 3e-7;

HermOp normalized_state(const HermOp& rho) {
  const double tr = rho.trace();
  if (!(tr > 1e-12)) throw Error(Err::ZeroOperator, "state has vanishing trace");
  return rho * (1.0 / tr);
}

void require_bipartite(const HermOp& rho, const char* who) {
  if (rho.da < 2 || rho.db < 2)
    throw Error(Err::ContractViolation,
                std::string(who) + " needs a bipartite cut with both sides >= 2");
}

struct MarginResult {
  FeasibilityCheck fc;
  HermOp sigma;
};

// Margin-maximizing feasibility query over the full PPT cone: does sigma
// exist with sigma <= rho <= lambda*sigma, sigma PSD, sigma^{T_B} PSD?
// All four operator inequalities share one slack margin t; the level is
// feasible exactly when the optimal margin is nonnegative.
MarginResult ppt_margin_solve(const HermOp& rho, double lambda, double gap_tol) {
  const int d = rho.dim();
  LmiProgram prog;
  std::vector<int> vars;
  vars.reserve(static_cast<std::size_t>(d) * d);
  const auto basis = herm_basis(d);
  for (int k = 0; k < d * d; ++k) vars.push_back(prog.add_var(0.0));
  const int tvar = prog.add_var(1.0);

  const int l_psd = prog.add_lmi(d);
  const int l_ppt = prog.add_lmi(d);
  const int l_low = prog.add_lmi(d);
  const int l_high = prog.add_lmi(d);
  const Mat id = Mat::Identity(d, d);
  for (int k = 0; k < d * d; ++k) {
    HermOp bk(rho.da, rho.db, basis[k]);
    prog.set_coef(l_psd, vars[k], -basis[k]);
    prog.set_coef(l_ppt, vars[k], -partial_transpose(bk).m);
    prog.set_coef(l_low, vars[k], basis[k]);
    prog.set_coef(l_high, vars[k], -lambda * basis[k]);
  }
  for (int l : {l_psd, l_ppt, l_low, l_high}) prog.set_coef(l, tvar, id);
  prog.set_const(l_low, rho.m);
  prog.set_const(l_high, (-1.0) * rho.m);

  ConicProgram low = prog.lower();
  ConicSolution sol = solve(low, gap_tol);
  // An unconverged query must not masquerade as an infeasibility verdict;
  // that would overstate the bisection's lower end.
  if (!certified_solution(low, sol))
    throw Error(Err::NumericalBreakdown,
                std::string("ppt margin query ended with status ") + status_name(sol.status));
  MarginResult out;
  out.fc.margin = prog.objective_value(sol);
  out.fc.feasible = out.fc.margin >= kFeasSlack;
  const RVec y = prog.variables(sol);
  Mat sig = Mat::Zero(d, d);
  for (int k = 0; k < d * d; ++k) sig += y[k] * basis[k];
  out.sigma = HermOp(rho.da, rho.db, hermitize(sig));
  return out;
}

struct DictMargin {
  FeasibilityCheck fc;
  RVec weights;
  HermOp pricing;  ///< Z_low - lambda Z_high from the solver-primal blocks
};

// Restricted margin query over the convex hull of a product dictionary:
// sigma = sum_i w_i P_i with w >= 0. The solver-primal blocks of the two
// operator inequalities are the multipliers whose difference prices new
// products (a product with negative pricing value can raise the margin).
DictMargin dict_margin_solve(const HermOp& rho, const std::vector<HermOp>& dict,
                             double lambda, double gap_tol) {
  const int d = rho.dim();
  const int k = static_cast<int>(dict.size());
  LmiProgram prog;
  std::vector<int> vars;
  vars.reserve(dict.size());
  for (int i = 0; i < k; ++i) vars.push_back(prog.add_var(0.0));
  const int tvar = prog.add_var(1.0);

  const int l_low = prog.add_lmi(d);
  const int l_high = prog.add_lmi(d);
  prog.set_const(l_low, rho.m);
  prog.set_const(l_high, (-1.0) * rho.m);
  const Mat id = Mat::Identity(d, d);
  prog.set_coef(l_low, tvar, id);
  prog.set_coef(l_high, tvar, id);
  const Mat neg_one = (-1.0) * Mat::Identity(1, 1);
  for (int i = 0; i < k; ++i) {
    prog.set_coef(l_low, vars[i], dict[i].m);
    prog.set_coef(l_high, vars[i], -lambda * dict[i].m);
    const int l_pos = prog.add_lmi(1);
    prog.set_coef(l_pos, vars[i], neg_one);
  }

  ConicProgram low = prog.lower();
  ConicSolution sol = solve(low, gap_tol);
  if (!certified_solution(low, sol))
    throw Error(Err::NumericalBreakdown,
                std::string("dictionary margin query ended with status ") + status_name(sol.status));
  DictMargin out;
  out.fc.margin = prog.objective_value(sol);
  out.fc.feasible = out.fc.margin >= kFeasSlack;
  const RVec y = prog.variables(sol);
  out.weights = y.head(k);
  Mat g = real_unembed(sol.x[0]) - lambda * real_unembed(sol.x[1]);
  out.pricing = HermOp(rho.da, rho.db, hermitize(g));
  return out;
}

double candidate_value(const HermOp& rho, const SeparableCandidate& cand) {
  if (cand.size() == 0) return kInf;
  HermOp sig = cand.state();
  if (!(sig.trace() > 1e-12)) return kInf;
  DivergenceValue v = d_omega(rho, sig);
  return v.finite ? v.value : kInf;
}

SeparableCandidate basis_candidate(int da, int db) {
  SeparableCandidate c;
  const double w = 1.0 / (da * db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      CVec a = CVec::Zero(da);
      a[i] = 1.0;
      CVec b = CVec::Zero(db);
      b[j] = 1.0;
      c.weights.push_back(w);
      c.factors_a.push_back(a);
      c.factors_b.push_back(b);
    }
  return c;
}

// Product of the reduced states, decomposed in their own eigenbases; equals
// rho itself whenever rho is a product state.
SeparableCandidate marginal_candidate(const HermOp& rho) {
  SeparableCandidate c;
  HermOp ra = partial_trace(rho, 1);
  HermOp rb = partial_trace(rho, 0);
  Eigen::SelfAdjointEigenSolver<Mat> ea(ra.m);
  Eigen::SelfAdjointEigenSolver<Mat> eb(rb.m);
  for (int i = 0; i < rho.da; ++i)
    for (int j = 0; j < rho.db; ++j) {
      const double w = std::max(ea.eigenvalues()[i], 0.0) * std::max(eb.eigenvalues()[j], 0.0);
      if (w <= 1e-14) continue;
      c.weights.push_back(w);
      c.factors_a.push_back(ea.eigenvectors().col(i));
      c.factors_b.push_back(eb.eigenvectors().col(j));
    }
  return c;
}

// The six single-qubit stabilizer states form a projective 2-design, so
// degree-(2,2) Haar averages over pure qubit states equal their average.
std::vector<CVec> qubit_design() {
  std::vector<CVec> out;
  const double s = 1.0 / std::sqrt(2.0);
  auto push = [&](cxd x, cxd y) {
    CVec v(2);
    v << x, y;
    out.push_back(v);
  };
  push(1.0, 0.0);
  push(0.0, 1.0);
  push(s, s);
  push(s, -s);
  push(s, cxd(0.0, s));
  push(s, cxd(0.0, -s));
  return out;
}

CVec qubit_orth(const CVec& v) {
  CVec w(2);
  w << -std::conj(v[1]), std::conj(v[0]);
  return w;
}

CVec conj_vec(const CVec& v) { return v.conjugate(); }

// Exact product mixtures of every separable two-qubit Werner state:
// alpha * (symmetric average of |aa>) + (1 - alpha) * (average of |a a_perp>).
SeparableCandidate werner_mix_candidate(double alpha) {
  SeparableCandidate c;
  for (const CVec& a : qubit_design()) {
    c.weights.push_back(alpha / 6.0);
    c.factors_a.push_back(a);
    c.factors_b.push_back(a);
    c.weights.push_back((1.0 - alpha) / 6.0);
    c.factors_a.push_back(a);
    c.factors_b.push_back(qubit_orth(a));
  }
  return c;
}

// Exact product mixtures of every separable two-qubit isotropic state:
// beta * (average of |a, conj a>) + (1 - beta) * (average of |a, perp(conj a)>).
SeparableCandidate iso_mix_candidate(double beta) {
  SeparableCandidate c;
  for (const CVec& a : qubit_design()) {
    c.weights.push_back(beta / 6.0);
    c.factors_a.push_back(a);
    c.factors_b.push_back(conj_vec(a));
    c.weights.push_back((1.0 - beta) / 6.0);
    c.factors_a.push_back(a);
    c.factors_b.push_back(qubit_orth(conj_vec(a)));
  }
  return c;
}

std::vector<SeparableCandidate> build_candidates(const HermOp& rho,
                                                 const SepOptions& opts) {
  std::vector<SeparableCandidate> cands;
  cands.push_back(basis_candidate(rho.da, rho.db));
  cands.push_back(marginal_candidate(rho));
  if (rho.da == 2 && rho.db == 2) {
    const double fw = (swap_op(2).m * rho.m).trace().real();
    const double p_proj = std::clamp((fw + 1.0) / 2.0, 0.5, 1.0);
    cands.push_back(werner_mix_candidate(2.0 * p_proj - 1.0));
    const double overlap = (max_entangled(2).m * rho.m).trace().real();
    const double f_proj = std::clamp(overlap, 0.0, 0.5);
    cands.push_back(iso_mix_candidate(2.0 * f_proj));
  }
  for (const SeparableCandidate& c : opts.extra_candidates) cands.push_back(c);
  return cands;
}

void append_products(const SeparableCandidate& cand, std::vector<HermOp>* dict,
                     std::vector<CVec>* fa, std::vector<CVec>* fb) {
  for (std::size_t i = 0; i < cand.size(); ++i) {
    ProductPoint p;
    p.a = cand.factors_a[i];
    p.b = cand.factors_b[i];
    dict->push_back(p.projector());
    fa->push_back(p.a);
    fb->push_back(p.b);
  }
}

SeparableCandidate candidate_from_weights(const RVec& w,
                                          const std::vector<CVec>& fa,
                                          const std::vector<CVec>& fb) {
  SeparableCandidate c;
  double total = 0.0;
  for (int i = 0; i < w.size(); ++i) total += std::max(w[i], 0.0);
  if (total <= 0.0) return c;
  for (int i = 0; i < w.size(); ++i) {
    const double wi = std::max(w[i], 0.0);
    if (wi <= 1e-12 * total) continue;
    c.weights.push_back(wi / total);
    c.factors_a.push_back(fa[i]);
    c.factors_b.push_back(fb[i]);
  }
  return c;
}

struct RefineResult {
  SeparableCandidate cand;
  double value = kInf;
};

// Column generation over a growing product dictionary. Each round brackets
// the dictionary's own level by bisection, reads the mixture at the feasible
// end, then prices a new product at the infeasible end; no improving product
// means the dictionary hull already meets the separable optimum at that
// level, so the loop stops.
RefineResult refine_inner(const HermOp& rho, std::vector<HermOp> dict,
                          std::vector<CVec> fa, std::vector<CVec> fb,
                          double lower_floor, double start_upper,
                          const SepOptions& opts) {
  RefineResult best;
  const double floor_log = std::max(0.0, lower_floor);
  const double stop_gap = std::max(1e-6, opts.bisect_tol);
  // The pad keeps the bisection's required feasible endpoint clear of the
  // boundary, where the optimal margin shrinks below what the solver can
  // resolve at its gap tolerance.
  const double pad = 1e-4;
  double hi = start_upper + pad;

  double prev_upper = kInf;
  for (int round = 0; round < opts.refine_rounds; ++round) {
    try {
      FeasOracle oracle = [&](double level) {
        return dict_margin_solve(rho, dict, std::exp2(level), opts.gap_tol).fc;
      };
      BisectBracket bb = bisect_feasible(oracle, floor_log, hi, opts.bisect_tol);
      DictMargin fm = dict_margin_solve(rho, dict, std::exp2(bb.upper), opts.gap_tol);
      SeparableCandidate cand = candidate_from_weights(fm.weights, fa, fb);
      const double val = candidate_value(rho, cand);
      if (val < best.value) {
        best.value = val;
        best.cand = cand;
      }
      hi = bb.upper + pad;
      if (best.value <= floor_log + stop_gap) break;
      // A round that fails to move the hull level means the remaining gap is
      // not the dictionary's fault; more columns would only churn.
      if (bb.upper > prev_upper - 0.25 * stop_gap) break;
      prev_upper = bb.upper;

      // Saturate the pricing step at a probe just above the certified floor:
      // keep adding improving products until the grown hull reaches the probe
      // or no product improves. One margin solve per added column.
      const double probe = floor_log + 0.25 * stop_gap;
      bool grew = false;
      for (int j = 0; j < 48; ++j) {
        DictMargin pm = dict_margin_solve(rho, dict, std::exp2(probe), opts.gap_tol);
        if (pm.fc.feasible) break;
        const double gscale = std::max(1.0, pm.pricing.m.norm());
        ProductPoint pp = min_product_form(
            pm.pricing, opts.ascent_restarts,
            opts.seed + 977 * static_cast<std::uint64_t>(round) + 131 * static_cast<std::uint64_t>(j) + 13);
        if (pp.value >= -1e-9 * gscale) break;
        dict.push_back(pp.projector());
        fa.push_back(pp.a);
        fb.push_back(pp.b);
        grew = true;
      }
      if (!grew) break;
    } catch (const Error&) {
      break;
    }
  }
  return best;
}

// A rank-one entangled state dominates no separable operator at any scale:
// anything below it is a multiple of the same entangled projector. Decided
// exactly through the Schmidt rank of the lone eigenvector.
bool infinite_by_support(const HermOp& r) {
  Eigen::SelfAdjointEigenSolver<Mat> es(r.m);
  const RVec& w = es.eigenvalues();
  const double top = w[r.dim() - 1];
  int rank = 0;
  for (int i = 0; i < r.dim(); ++i)
    if (w[i] > 1e-10 * top) ++rank;
  if (rank != 1) return false;
  CVec v = es.eigenvectors().col(r.dim() - 1);
  Mat resh(r.da, r.db);
  for (int i = 0; i < r.da; ++i)
    for (int j = 0; j < r.db; ++j) resh(i, j) = v[i * r.db + j];
  Eigen::JacobiSVD<Mat> svd(resh);
  return svd.singularValues()[1] > 1e-9 * svd.singularValues()[0];
}

}  // namespace

HermOp SeparableCandidate::state() const {
  if (weights.empty())
    throw Error(Err::ZeroOperator, "empty separable candidate has no state");
  const int da = static_cast<int>(factors_a[0].size());
  const int db = static_cast<int>(factors_b[0].size());
  Mat acc = Mat::Zero(da * db, da * db);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    ProductPoint p;
    p.a = factors_a[i];
    p.b = factors_b[i];
    acc += weights[i] * p.projector().m;
  }
  return HermOp(da, db, hermitize(acc));
}

bool is_ppt(const HermOp& rho) {
  require_bipartite(rho, "is_ppt");
  const HermOp r = normalized_state(rho);
  return partial_transpose(r).min_eig() >= -1e-9;
}

Bracket sep_sup_ratio(const HermOp& m_op, const HermOp& n_op, const SepOptions& opts) {
  require_bipartite(m_op, "sep_sup_ratio");
  if (m_op.da != n_op.da || m_op.db != n_op.db)
    throw Error(Err::ContractViolation, "sep_sup_ratio operands need matching cuts");
  const double mscale = std::max(m_op.m.cwiseAbs().maxCoeff(), 1e-300);
  const double nscale = std::max(n_op.m.cwiseAbs().maxCoeff(), 1e-300);
  if (m_op.min_eig() < -1e-8 * mscale || n_op.min_eig() < -1e-8 * nscale)
    throw Error(Err::InvalidOperator, "sep_sup_ratio operands must be PSD");

  Bracket out;
  ProductPoint asc = max_product_ratio(m_op, n_op, opts.ascent_restarts, opts.seed);
  SeparableCandidate cand;
  cand.weights.push_back(1.0);
  cand.factors_a.push_back(asc.a);
  cand.factors_b.push_back(asc.b);
  out.candidate = cand;
  out.lower = asc.value;
  if (!std::isfinite(asc.value)) {
    out.upper = kInf;
    return out;
  }

  HermProgram prog;
  const int x = prog.add_psd(m_op.dim());
  const int y = prog.add_psd(m_op.dim());
  prog.objective(x, m_op.m);
  prog.set_maximize(true);
  const int norm_row = prog.add_row(1.0);
  prog.coeff(norm_row, x, n_op.m);
  for (const Mat& e : herm_basis(m_op.dim())) {
    HermOp eh(m_op.da, m_op.db, e);
    const int row = prog.add_row(0.0);
    prog.coeff(row, y, e);
    prog.coeff(row, x, (-1.0) * partial_transpose(eh).m);
  }
  ConicProgram low = prog.lower();
  ConicSolution sol = solve(low, SolveOptions{std::min(opts.gap_tol, 1e-9), 300, 1e-7});
  if (sol.status == SolveStatus::unbounded)
    throw Error(Err::UnboundedRatio, "ppt relaxation of the ratio is unbounded");
  if (!certified_solution(low, sol))
    throw Error(Err::NumericalBreakdown,
                std::string("ppt ratio program ended with status ") + status_name(sol.status));
  out.upper = sol.dual_value + kValueSlack * (1.0 + std::abs(sol.dual_value));
  out.ppt_state = HermOp(m_op.da, m_op.db, prog.lift(sol)[0]);
  return out;
}

Bracket d_omega_ppt_bisect(const HermOp& rho, const SepOptions& opts) {
  require_bipartite(rho, "d_omega_ppt_bisect");
  const HermOp r = normalized_state(rho);
  double hi = opts.bisect_hi;
  if (hi <= 0.0) {
    const HermOp mix = identity_op(r.da, r.db) * (1.0 / r.dim());
    DivergenceValue anchor = d_omega(r, mix);
    if (!anchor.finite)
      throw Error(Err::BracketInvalid,
                  "no finite feasible level: state is rank deficient and no anchor was supplied");
    hi = anchor.value + 1e-4;
  }
  FeasOracle oracle = [&](double level) {
    return ppt_margin_solve(r, std::exp2(level), opts.gap_tol).fc;
  };
  BisectBracket bb = bisect_feasible(oracle, 0.0, hi, opts.bisect_tol);

  Bracket out;
  out.lower = std::max(0.0, bb.lower - kValueSlack);
  out.upper = bb.upper;
  out.ppt_state = ppt_margin_solve(r, std::exp2(bb.upper), opts.gap_tol).sigma;
  return out;
}

Bracket d_omega_ppt_dual(const HermOp& rho, const SepOptions& opts) {
  require_bipartite(rho, "d_omega_ppt_dual");
  const HermOp r = normalized_state(rho);
  const int d = r.dim();

  HermProgram prog;
  const int a = prog.add_psd(d);
  const int b = prog.add_psd(d);
  const int p = prog.add_psd(d);
  const int q = prog.add_psd(d);
  prog.objective(a, r.m);
  prog.set_maximize(true);
  const int norm_row = prog.add_row(1.0);
  prog.coeff(norm_row, b, r.m);
  for (const Mat& e : herm_basis(d)) {
    HermOp eh(r.da, r.db, e);
    const int row = prog.add_row(0.0);
    prog.coeff(row, b, e);
    prog.coeff(row, a, (-1.0) * e);
    prog.coeff(row, p, (-1.0) * e);
    prog.coeff(row, q, (-1.0) * partial_transpose(eh).m);
  }
  ConicProgram low = prog.lower();
  ConicSolution sol = solve(low, SolveOptions{std::min(opts.gap_tol, 1e-9), 300, 1e-7});

  Bracket out;
  if (sol.status == SolveStatus::unbounded) {
    out.lower = kInf;
    out.upper = kInf;
    return out;
  }
  if (!certified_solution(low, sol)) {
    out.lower = 0.0;
    out.upper = kInf;
    return out;
  }
  out.lower = std::log2(std::max(sol.primal_value * (1.0 - kValueSlack), 1.0));
  out.upper = std::log2(std::max(sol.dual_value * (1.0 + kValueSlack), 1.0));
  std::vector<Mat> lifted = prog.lift(sol);
  out.witness = std::make_pair(HermOp(r.da, r.db, lifted[a]),
                               HermOp(r.da, r.db, lifted[b]));
  return out;
}

Bracket d_omega_sep(const HermOp& rho, const SepOptions& opts) {
  require_bipartite(rho, "d_omega_sep");
  const HermOp r = normalized_state(rho);
  if (infinite_by_support(r)) {
    Bracket out;
    out.lower = kInf;
    out.upper = kInf;
    return out;
  }

  double best_u = kInf;
  std::optional<SeparableCandidate> best_c;
  std::vector<SeparableCandidate> cands = build_candidates(r, opts);
  for (const SeparableCandidate& c : cands) {
    const double v = candidate_value(r, c);
    if (v < best_u) {
      best_u = v;
      best_c = c;
    }
  }

  Bracket dual;
  try {
    dual = d_omega_ppt_dual(r, opts);
  } catch (const Error&) {
    dual = Bracket{};
  }
  double lower = std::max(0.0, dual.lower);

  Bracket bis;
  bool have_bis = false;
  if (std::isfinite(lower)) {
    SepOptions bopts = opts;
    if (bopts.bisect_hi <= 0.0) {
      const HermOp mix = identity_op(r.da, r.db) * (1.0 / r.dim());
      DivergenceValue anchor = d_omega(r, mix);
      double hi = anchor.finite ? anchor.value : kInf;
      hi = std::min(hi, best_u);
      if (std::isfinite(hi)) bopts.bisect_hi = hi + 1e-4;
    }
    if (bopts.bisect_hi > 0.0) {
      try {
        bis = d_omega_ppt_bisect(r, bopts);
        have_bis = true;
        lower = std::max(lower, bis.lower);
      } catch (const Error&) {
      }
    }
  }

  if (std::isfinite(best_u) && std::isfinite(lower) && opts.refine_rounds > 0 &&
      best_u - lower > std::max(1e-6, opts.bisect_tol)) {
    std::vector<HermOp> dict;
    std::vector<CVec> fa, fb;
    for (const SeparableCandidate& c : cands) append_products(c, &dict, &fa, &fb);
    RefineResult rr = refine_inner(r, std::move(dict), std::move(fa), std::move(fb),
                                   lower, best_u, opts);
    if (rr.value < best_u) {
      best_u = rr.value;
      best_c = rr.cand;
    }
  }

  Bracket out;
  out.lower = std::isfinite(lower) ? std::max(0.0, lower) : kInf;
  out.upper = best_u;
  out.witness = dual.witness;
  if (have_bis) out.ppt_state = bis.ppt_state;
  if (std::isfinite(best_u)) out.candidate = best_c;
  return out;
}

}  // namespace qomega
