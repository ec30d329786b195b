/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_SOLVER_CONIC_HPP
#define QOMEGA_SOLVER_CONIC_HPP

#include <string>
#include <vector>

#include "core/hermop.hpp"

namespace qomega {

enum class BlockKind { PSD, Nonneg };

/**
 * @brief Linear conic program in primal standard form,
 *        min <C,X> s.t. <A_i,X> = b_i, X in a product of PSD blocks
 *        and nonnegative scalars. maximize flips the objective sense.
 *
 * Data is dense and real; complex Hermitian constraints enter through the
 * lowering layer in hermprog.hpp. Nonnegative scalars are 1x1 blocks.
 */
struct ConicProgram {
  struct Block {
    BlockKind kind;
    int side;
  };

  std::vector<Block> blocks;
  std::vector<RMat> objective;          ///< per block, symmetric
  std::vector<std::vector<RMat>> rows;  ///< rows[i][b], symmetric
  RVec rhs;
  bool maximize = false;

  int add_block(BlockKind kind, int side);
  int add_row(double rhs_value);
  /** Accumulate a coefficient into the objective or a constraint row. */
  void obj_coeff(int block, const RMat& c);
  void row_coeff(int row, int block, const RMat& a);

  int num_rows() const { return static_cast<int>(rhs.size()); }
  int num_blocks() const { return static_cast<int>(blocks.size()); }

  /** Debug dump (not a stable interchange format). */
  std::string dump_json() const;
};

enum class SolveStatus { optimal, infeasible, unbounded, max_iters };

const char* status_name(SolveStatus s);

struct ConicSolution {
  SolveStatus status = SolveStatus::max_iters;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double duality_gap = 0.0;
  std::vector<RMat> x;  ///< primal blocks
  RVec y;               ///< equality multipliers
  std::vector<RMat> s;  ///< dual slack blocks
  int iterations = 0;
};

struct SolveOptions {
  double gap_tol = 1e-7;
  int max_iters = 120;
  double ray_tol = 1e-7;  ///< improving-ray declaration threshold
};

/** Interior-point solve (NT scaling, predictor-corrector). Deterministic.
 *  Throws NumericalBreakdown when the reduced KKT system stays singular
 *  through the regularization ladder. */
ConicSolution solve(const ConicProgram& p, const SolveOptions& opts = {});
ConicSolution solve(const ConicProgram& p, double gap_tol);

}  // namespace qomega

#endif
