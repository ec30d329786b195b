/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_SOLVER_HERMPROG_HPP
#define QOMEGA_SOLVER_HERMPROG_HPP

#include "core/hermop.hpp"
#include "solver/conic.hpp"

namespace qomega {

/**
 * @brief Primal-form builder over complex Hermitian PSD variables.
 *
 * Variables are Hermitian PSD blocks plus nonnegative scalars; rows are
 * affine equalities over traces. Lowering embeds each Hermitian block as
 * a real symmetric block of doubled side and halves the coefficient
 * matrices so that all values (objective, rows) keep their complex-domain
 * meaning literally.
 */
class HermProgram {
 public:
  int add_psd(int complex_side);
  int add_scalar();
  /** Free scalar, realized as a difference of two nonnegative scalars. */
  int add_free();
  int add_row(double rhs);

  void objective(int psd_block, const Mat& coef);
  void objective_scalar(int scalar_id, double coef);
  void objective_free(int free_id, double coef);
  void coeff(int row, int psd_block, const Mat& coef);
  void coeff_scalar(int row, int scalar_id, double coef);
  void coeff_free(int row, int free_id, double coef);
  void set_maximize(bool maximize) { maximize_ = maximize; }

  ConicProgram lower() const;

  /** Complex PSD blocks of a solution (projected back from the embedding). */
  std::vector<Mat> lift(const ConicSolution& sol) const;
  double scalar_value(const ConicSolution& sol, int scalar_id) const;
  double free_value(const ConicSolution& sol, int free_id) const;

 private:
  struct Row {
    double rhs;
    std::vector<Mat> coefs;       // per psd block
    std::vector<double> scoefs;   // per scalar
    std::vector<double> fcoefs;   // per free var
  };
  std::vector<int> sides_;
  int num_scalars_ = 0;
  int num_free_ = 0;
  std::vector<Mat> obj_;
  std::vector<double> sobj_;
  std::vector<double> fobj_;
  std::vector<Row> rows_;
  bool maximize_ = false;

  void sync_row(Row& r) const;
};

/**
 * @brief Dual-orientation builder: free scalar variables y with linear
 *        matrix inequalities S_j = C_j - sum_k y_k A_jk >= 0, maximizing
 *        a linear functional of y.
 *
 * Encoded directly as solver-primal data (one equality row per variable),
 * so the solver's dual side carries (y, S) and the reported dual value is
 * the LMI objective. Suited to feasibility margins, where the normal
 * matrix stays as small as the variable count.
 */
/**
 * @brief Accept a solve outcome as value-certifying.
 *
 * optimal always qualifies; a stalled max_iters iterate still does when it
 * is primal feasible to 1e-7 and its relative duality gap sits a decade
 * inside the 1e-6 agreement budget.
 */
bool certified_solution(const ConicProgram& prog, const ConicSolution& sol);

class LmiProgram {
 public:
  int add_var(double obj_weight = 0.0);
  int add_lmi(int complex_side);
  void set_const(int lmi, const Mat& c);
  void set_coef(int lmi, int var, const Mat& a);

  ConicProgram lower() const;

  /** Objective value attained by the returned y (the solver dual value). */
  double objective_value(const ConicSolution& sol) const { return sol.dual_value; }
  RVec variables(const ConicSolution& sol) const { return sol.y; }
  /** Complex slack blocks S_j at the returned y. */
  std::vector<Mat> lift_slacks(const ConicSolution& sol) const;

 private:
  struct Lmi {
    int side;
    Mat cconst;
    std::vector<Mat> coefs;  // per variable
  };
  std::vector<Lmi> lmis_;
  std::vector<double> obj_;
};

}  // namespace qomega

#endif
