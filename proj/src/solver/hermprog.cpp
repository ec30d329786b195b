/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "solver/hermprog.hpp"

#include <algorithm>
#include <cmath>

namespace qomega {

namespace {

void check_side(const Mat& coef, int side, const char* what) {
  if (coef.rows() != side || coef.cols() != side)
    throw Error(Err::ContractViolation, std::string(what) + ": coefficient side mismatch");
  const double dev = (coef - coef.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermTol)
    throw Error(Err::ContractViolation, std::string(what) + ": coefficient is not Hermitian");
}

}  // namespace

int HermProgram::add_psd(int complex_side) {
  if (complex_side < 1) throw Error(Err::ContractViolation, "psd block side must be >= 1");
  sides_.push_back(complex_side);
  obj_.push_back(Mat::Zero(complex_side, complex_side));
  for (auto& r : rows_) r.coefs.push_back(Mat::Zero(complex_side, complex_side));
  return static_cast<int>(sides_.size()) - 1;
}

int HermProgram::add_scalar() {
  ++num_scalars_;
  sobj_.push_back(0.0);
  for (auto& r : rows_) r.scoefs.push_back(0.0);
  return num_scalars_ - 1;
}

int HermProgram::add_free() {
  ++num_free_;
  fobj_.push_back(0.0);
  for (auto& r : rows_) r.fcoefs.push_back(0.0);
  return num_free_ - 1;
}

int HermProgram::add_row(double rhs) {
  Row r;
  r.rhs = rhs;
  for (int side : sides_) r.coefs.push_back(Mat::Zero(side, side));
  r.scoefs.assign(num_scalars_, 0.0);
  r.fcoefs.assign(num_free_, 0.0);
  rows_.push_back(std::move(r));
  return static_cast<int>(rows_.size()) - 1;
}

void HermProgram::objective(int psd_block, const Mat& coef) {
  check_side(coef, sides_.at(psd_block), "objective");
  obj_[psd_block] += coef;
}

void HermProgram::objective_scalar(int scalar_id, double coef) { sobj_.at(scalar_id) += coef; }
void HermProgram::objective_free(int free_id, double coef) { fobj_.at(free_id) += coef; }

void HermProgram::coeff(int row, int psd_block, const Mat& coef) {
  check_side(coef, sides_.at(psd_block), "row coefficient");
  rows_.at(row).coefs[psd_block] += coef;
}

void HermProgram::coeff_scalar(int row, int scalar_id, double coef) {
  rows_.at(row).scoefs.at(scalar_id) += coef;
}

void HermProgram::coeff_free(int row, int free_id, double coef) {
  rows_.at(row).fcoefs.at(free_id) += coef;
}

ConicProgram HermProgram::lower() const {
  ConicProgram p;
  p.maximize = maximize_;
  std::vector<int> psd_ids, scalar_ids, free_pos_ids, free_neg_ids;
  for (int side : sides_) psd_ids.push_back(p.add_block(BlockKind::PSD, 2 * side));
  for (int k = 0; k < num_scalars_; ++k)
    scalar_ids.push_back(p.add_block(BlockKind::Nonneg, 1));
  for (int k = 0; k < num_free_; ++k) {
    free_pos_ids.push_back(p.add_block(BlockKind::Nonneg, 1));
    free_neg_ids.push_back(p.add_block(BlockKind::Nonneg, 1));
  }

  auto scalar_mat = [](double v) {
    RMat m(1, 1);
    m(0, 0) = v;
    return m;
  };

  for (std::size_t b = 0; b < sides_.size(); ++b)
    p.obj_coeff(psd_ids[b], 0.5 * real_embed(obj_[b]));
  for (int k = 0; k < num_scalars_; ++k)
    if (sobj_[k] != 0.0) p.obj_coeff(scalar_ids[k], scalar_mat(sobj_[k]));
  for (int k = 0; k < num_free_; ++k)
    if (fobj_[k] != 0.0) {
      p.obj_coeff(free_pos_ids[k], scalar_mat(fobj_[k]));
      p.obj_coeff(free_neg_ids[k], scalar_mat(-fobj_[k]));
    }

  for (const Row& r : rows_) {
    int row = p.add_row(r.rhs);
    for (std::size_t b = 0; b < sides_.size(); ++b)
      p.row_coeff(row, psd_ids[b], 0.5 * real_embed(r.coefs[b]));
    for (int k = 0; k < num_scalars_; ++k)
      if (r.scoefs[k] != 0.0) p.row_coeff(row, scalar_ids[k], scalar_mat(r.scoefs[k]));
    for (int k = 0; k < num_free_; ++k)
      if (r.fcoefs[k] != 0.0) {
        p.row_coeff(row, free_pos_ids[k], scalar_mat(r.fcoefs[k]));
        p.row_coeff(row, free_neg_ids[k], scalar_mat(-r.fcoefs[k]));
      }
  }
  return p;
}

std::vector<Mat> HermProgram::lift(const ConicSolution& sol) const {
  std::vector<Mat> out;
  out.reserve(sides_.size());
  for (std::size_t b = 0; b < sides_.size(); ++b) out.push_back(real_unembed(sol.x[b]));
  return out;
}

double HermProgram::scalar_value(const ConicSolution& sol, int scalar_id) const {
  return sol.x[sides_.size() + scalar_id](0, 0);
}

double HermProgram::free_value(const ConicSolution& sol, int free_id) const {
  const std::size_t base = sides_.size() + num_scalars_ + 2 * free_id;
  return sol.x[base](0, 0) - sol.x[base + 1](0, 0);
}

int LmiProgram::add_var(double obj_weight) {
  obj_.push_back(obj_weight);
  for (auto& l : lmis_) l.coefs.push_back(Mat::Zero(l.side, l.side));
  return static_cast<int>(obj_.size()) - 1;
}

int LmiProgram::add_lmi(int complex_side) {
  if (complex_side < 1) throw Error(Err::ContractViolation, "lmi side must be >= 1");
  Lmi l;
  l.side = complex_side;
  l.cconst = Mat::Zero(complex_side, complex_side);
  l.coefs.assign(obj_.size(), Mat::Zero(complex_side, complex_side));
  lmis_.push_back(std::move(l));
  return static_cast<int>(lmis_.size()) - 1;
}

void LmiProgram::set_const(int lmi, const Mat& c) {
  Lmi& l = lmis_.at(lmi);
  check_side(c, l.side, "lmi constant");
  l.cconst += c;
}

void LmiProgram::set_coef(int lmi, int var, const Mat& a) {
  Lmi& l = lmis_.at(lmi);
  check_side(a, l.side, "lmi coefficient");
  l.coefs.at(var) += a;
}

bool certified_solution(const ConicProgram& prog, const ConicSolution& sol) {
  if (sol.status == SolveStatus::optimal) return true;
  if (sol.status != SolveStatus::max_iters) return false;
  double scale = 1.0 + std::max(std::abs(sol.primal_value), std::abs(sol.dual_value));
  if (sol.duality_gap / scale > 1e-7) return false;
  double resid = 0.0;
  for (std::size_t i = 0; i < prog.rows.size(); ++i) {
    double ax = 0.0;
    for (std::size_t b = 0; b < prog.blocks.size(); ++b)
      ax += (prog.rows[i][b].array() * sol.x[b].array()).sum();
    resid = std::max(resid, std::abs(ax - prog.rhs[i]));
  }
  return resid / (1.0 + prog.rhs.cwiseAbs().maxCoeff()) <= 1e-7;
}

ConicProgram LmiProgram::lower() const {
  // Solver primal: min <C,X> with one equality row per variable; the dual
  // side then reads A^T y + S = C, i.e. S_j = C_j - sum_k y_k A_jk >= 0
  // with dual objective b^T y = the LMI objective.
  ConicProgram p;
  p.maximize = false;
  for (const Lmi& l : lmis_) p.add_block(BlockKind::PSD, 2 * l.side);
  for (std::size_t b = 0; b < lmis_.size(); ++b)
    p.obj_coeff(static_cast<int>(b), 0.5 * real_embed(lmis_[b].cconst));
  for (std::size_t k = 0; k < obj_.size(); ++k) {
    int row = p.add_row(obj_[k]);
    for (std::size_t b = 0; b < lmis_.size(); ++b)
      p.row_coeff(row, static_cast<int>(b), 0.5 * real_embed(lmis_[b].coefs[k]));
  }
  return p;
}

std::vector<Mat> LmiProgram::lift_slacks(const ConicSolution& sol) const {
  std::vector<Mat> out;
  out.reserve(lmis_.size());
  for (std::size_t b = 0; b < lmis_.size(); ++b) out.push_back(real_unembed(sol.s[b]));
  return out;
}

}  // namespace qomega
