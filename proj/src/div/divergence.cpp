/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "div/divergence.hpp"

#include <cmath>
#include <limits>

#include "core/spectral.hpp"
#include "solver/hermprog.hpp"

namespace qomega {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

DivergenceValue infinite(DivMethod method) { return {kInf, false, method}; }

bool certified(const ConicProgram& prog, const ConicSolution& sol) {
  return certified_solution(prog, sol);
}

void require_nonzero(const HermOp& h, const char* name) {
  if (h.m.cwiseAbs().maxCoeff() <= 0.0)
    throw Error(Err::ZeroOperator, std::string(name) + " is the zero operator");
}

// Largest eigenvalue of sigma^{-1/2} rho sigma^{-1/2} on supp(sigma).
double dmax_ratio(const HermOp& rho, const HermOp& sigma) {
  HermOp isq = pseudo_power(sigma, -0.5);
  HermOp mid(rho.da, rho.db, hermitize(isq.m * rho.m * isq.m));
  return mid.max_eig();
}

double dmax_sdp_value(const HermOp& rho, const HermOp& sigma, bool* bounded) {
  HermProgram prog;
  int x = prog.add_psd(rho.dim());
  int slack = prog.add_scalar();
  int row = prog.add_row(1.0);
  prog.coeff(row, x, sigma.m);
  prog.coeff_scalar(row, slack, 1.0);
  prog.objective(x, rho.m);
  prog.set_maximize(true);
  ConicProgram low = prog.lower();
  ConicSolution sol = solve(low, SolveOptions{1e-9, 200, 1e-7});
  if (sol.status == SolveStatus::unbounded) {
    *bounded = false;
    return kInf;
  }
  if (!certified(low, sol))
    throw Error(Err::NumericalBreakdown,
                std::string("d_max sdp ended with status ") + status_name(sol.status));
  *bounded = true;
  return sol.primal_value;
}

double domega_sdp_value(const HermOp& rho, const HermOp& sigma, bool* bounded) {
  HermProgram prog;
  int a = prog.add_psd(rho.dim());
  int b = prog.add_psd(rho.dim());
  int slack = prog.add_scalar();
  int norm_row = prog.add_row(1.0);
  prog.coeff(norm_row, b, rho.m);
  int cone_row = prog.add_row(0.0);
  prog.coeff(cone_row, a, sigma.m);
  prog.coeff(cone_row, b, (-1.0) * sigma.m);
  prog.coeff_scalar(cone_row, slack, 1.0);
  prog.objective(a, rho.m);
  prog.set_maximize(true);
  ConicProgram low = prog.lower();
  ConicSolution sol = solve(low, SolveOptions{1e-9, 200, 1e-7});
  if (sol.status == SolveStatus::unbounded) {
    *bounded = false;
    return kInf;
  }
  if (!certified(low, sol))
    throw Error(Err::NumericalBreakdown,
                std::string("d_omega sdp ended with status ") + status_name(sol.status));
  *bounded = true;
  return sol.primal_value;
}

}  // namespace

const char* div_method_name(DivMethod m) {
  switch (m) {
    case DivMethod::eigen_closed_form: return "eigen_closed_form";
    case DivMethod::sdp: return "sdp";
    case DivMethod::classical: return "classical";
  }
  return "unknown";
}

DivergenceValue d_max(const HermOp& rho, const HermOp& sigma, DivMethod method) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  if (method == DivMethod::sdp) {
    if (!support_contained(rho, sigma)) return infinite(DivMethod::sdp);
    bool bounded = false;
    double v = dmax_sdp_value(rho, sigma, &bounded);
    if (!bounded) return infinite(DivMethod::sdp);
    return {std::log2(v), true, DivMethod::sdp};
  }
  if (!support_contained(rho, sigma)) return infinite(DivMethod::eigen_closed_form);
  return {std::log2(dmax_ratio(rho, sigma)), true, DivMethod::eigen_closed_form};
}

DivergenceValue d_omega(const HermOp& rho, const HermOp& sigma, DivMethod method) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  if (method == DivMethod::sdp) {
    if (!support_contained(rho, sigma) || !support_contained(sigma, rho))
      return infinite(DivMethod::sdp);
    bool bounded = false;
    double v = domega_sdp_value(rho, sigma, &bounded);
    if (!bounded) return infinite(DivMethod::sdp);
    return {std::max(0.0, std::log2(v)), true, DivMethod::sdp};
  }
  if (!support_contained(rho, sigma) || !support_contained(sigma, rho))
    return infinite(DivMethod::eigen_closed_form);
  double forward = std::log2(dmax_ratio(rho, sigma));
  double backward = std::log2(dmax_ratio(sigma, rho));
  return {std::max(0.0, forward + backward), true, DivMethod::eigen_closed_form};
}

DivergenceValue d_omega_classical(const RVec& p, const RVec& q) {
  if (p.size() != q.size())
    throw Error(Err::InvalidOperator, "probability vectors differ in length");
  double scale = std::max(p.cwiseAbs().maxCoeff(), q.cwiseAbs().maxCoeff());
  if (scale <= 0.0) throw Error(Err::ZeroOperator, "both vectors vanish");
  double tol = kSupportTol * scale;
  double max_pq = 0.0, max_qp = 0.0;
  for (int i = 0; i < p.size(); ++i) {
    bool ps = p[i] > tol, qs = q[i] > tol;
    if (ps != qs) return infinite(DivMethod::classical);
    if (!ps) continue;
    max_pq = std::max(max_pq, p[i] / q[i]);
    max_qp = std::max(max_qp, q[i] / p[i]);
  }
  if (max_pq <= 0.0) throw Error(Err::ZeroOperator, "both vectors vanish");
  return {std::max(0.0, std::log2(max_pq) + std::log2(max_qp)), true,
          DivMethod::classical};
}

DivergenceValue rel_entropy(const HermOp& rho, const HermOp& sigma) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  if (!support_contained(rho, sigma)) return infinite(DivMethod::eigen_closed_form);
  SpectralDecomposition er = eig_hermitian(rho);
  SpectralDecomposition es = eig_hermitian(sigma);
  double tol_r = kSupportTol * std::abs(er.eigenvalues[0]);
  double tol_s = kSupportTol * std::abs(es.eigenvalues[0]);
  double value = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    double p = er.eigenvalues[i];
    if (p > tol_r) value += p * std::log2(p);
  }
  for (int j = 0; j < sigma.dim(); ++j) {
    double q = es.eigenvalues[j];
    if (q <= tol_s) continue;
    CVec f = es.eigenvectors.col(j);
    value -= std::log2(q) * (f.adjoint() * rho.m * f)(0).real();
  }
  return {value, true, DivMethod::eigen_closed_form};
}

DivergenceValue sandwiched_renyi(double alpha, const HermOp& rho, const HermOp& sigma) {
  if (!(alpha > 1.0))
    throw Error(Err::ContractViolation, "sandwiched_renyi requires alpha > 1");
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  if (!support_contained(rho, sigma)) return infinite(DivMethod::eigen_closed_form);
  HermOp wedge = pseudo_power(sigma, (1.0 - alpha) / (2.0 * alpha));
  HermOp x(rho.da, rho.db, hermitize(wedge.m * rho.m * wedge.m));
  SpectralDecomposition ex = eig_hermitian(x);
  // Accumulate tr(X^alpha) - 1 so the log keeps precision as alpha -> 1.
  double excess = -1.0;
  for (int i = 0; i < x.dim(); ++i) {
    double v = ex.eigenvalues[i];
    if (v <= 0.0) continue;
    excess += v * std::exp((alpha - 1.0) * std::log(v));
  }
  double value = std::log1p(excess) / (std::log(2.0) * (alpha - 1.0));
  return {value, true, DivMethod::eigen_closed_form};
}

DivergenceValue rel_entropy_variance(const HermOp& rho, const HermOp& sigma) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  if (!support_contained(rho, sigma)) return infinite(DivMethod::eigen_closed_form);
  DivergenceValue d = rel_entropy(rho, sigma);
  SpectralDecomposition er = eig_hermitian(rho);
  SpectralDecomposition es = eig_hermitian(sigma);
  double tol_r = kSupportTol * std::abs(er.eigenvalues[0]);
  double tol_s = kSupportTol * std::abs(es.eigenvalues[0]);
  int dim = rho.dim();
  // Pseudo-logs vanish on the kernels; the rho^{1/2} factors kill exactly
  // the directions where that convention differs from the true limit.
  Mat log_r = Mat::Zero(dim, dim), log_s = Mat::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (er.eigenvalues[i] > tol_r)
      log_r += std::log2(er.eigenvalues[i]) * er.eigenvectors.col(i) *
               er.eigenvectors.col(i).adjoint();
    if (es.eigenvalues[i] > tol_s)
      log_s += std::log2(es.eigenvalues[i]) * es.eigenvectors.col(i) *
               es.eigenvectors.col(i).adjoint();
  }
  Mat centered = log_r - log_s - d.value * Mat::Identity(dim, dim);
  HermOp sqrt_r = pseudo_power(rho, 0.5);
  double v = (centered * sqrt_r.m).squaredNorm();
  return {v, true, DivMethod::eigen_closed_form};
}

SmoothingPoint smoothing_point(const HermOp& rho, const HermOp& sigma, double lambda) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  double scale = std::exp2(lambda);
  HermOp diff = rho - scale * sigma;
  SpectralDecomposition ed = eig_hermitian(diff);
  Mat pos = Mat::Zero(rho.dim(), rho.dim());
  double excess = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    double v = ed.eigenvalues[i];
    if (v <= 0.0) continue;
    pos += v * ed.eigenvectors.col(i) * ed.eigenvectors.col(i).adjoint();
    excess += v;
  }
  SmoothingPoint out;
  out.epsilon = excess / (2.0 * scale);
  out.smoothed = HermOp(rho.da, rho.db, hermitize(pos / scale + sigma.m));
  return out;
}

double lhl_bound(const HermOp& rho, const HermOp& sigma, double epsilon) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  double rho_min = rho.min_eig(), rho_max = rho.max_eig();
  double sig_min = sigma.min_eig(), sig_max = sigma.max_eig();
  if (rho_min <= kSupportTol * rho_max || sig_min <= kSupportTol * sig_max)
    throw Error(Err::RankDeficient, "lhl_bound requires full-rank states");
  double fwd = dmax_ratio(rho, sigma);
  double bwd = dmax_ratio(sigma, rho);
  double t1 = (fwd / rho_min) * std::abs(rho_min / sig_min - fwd);
  double t2 = bwd * (1.0 / sig_min - 1.0 / sig_max);
  return epsilon * std::max(t1, t2);
}

double l18_bound(const HermOp& rho, const HermOp& sigma) {
  require_nonzero(rho, "rho");
  require_nonzero(sigma, "sigma");
  if (std::abs(rho.trace() - sigma.trace()) > 1e-10)
    throw Error(Err::TraceMismatch, "l18_bound requires equal traces");
  if (!support_contained(rho, sigma) || !support_contained(sigma, rho))
    throw Error(Err::SupportMismatch, "l18_bound requires equal supports");
  DivergenceValue dom = d_omega(rho, sigma);
  return sigma.trace() * std::min(std::exp2(dom.value) - 1.0, 2.0);
}

}  // namespace qomega
