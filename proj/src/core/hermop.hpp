/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#ifndef QOMEGA_CORE_HERMOP_HPP
#define QOMEGA_CORE_HERMOP_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qomega {

using cxd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

/** Error codes carried by every qomega exception. */
enum class Err {
  InvalidOperator,
  ZeroOperator,
  SupportMismatch,
  TraceMismatch,
  RankDeficient,
  SizeGuard,
  BracketInvalid,
  NumericalBreakdown,
  UnboundedRatio,
  DegenerateAbstention,
  ZeroSuccessProbability,
  ConversionUnknown,
  ContractViolation,
  ParseError,
  IoError,
};

/** Exception type used throughout the library. */
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Err code() const noexcept { return code_; }

 private:
  Err code_;
};

const char* err_name(Err code);

/// Elementwise Hermiticity tolerance enforced on construction.
inline constexpr double kHermTol = 1e-12;
/// Cone membership tolerance: an operator counts as PSD when its minimum
/// eigenvalue is >= -1e-10 (eigenvalues above the threshold clip to zero).
inline constexpr double kPsdTol = 1e-10;
/// Relative eigenvalue threshold separating support from kernel.
inline constexpr double kSupportTol = 1e-9;
/// Relative spectral clustering tolerance.
inline constexpr double kSpecTol = 1e-8;

/**
 * @brief Dense Hermitian operator on a bipartite space of dimension da*db.
 *
 * The bipartite cut (da, db) is carried with the matrix so partial traces
 * and transposes need no extra bookkeeping; single-system operators use
 * db = 1. Construction validates Hermiticity elementwise to 1e-12.
 */
struct HermOp {
  int da = 1;
  int db = 1;
  Mat m;

  HermOp() = default;
  HermOp(int dim_a, int dim_b, Mat entries);

  int dim() const { return da * db; }
  double trace() const { return m.trace().real(); }

  HermOp with_cut(int dim_a, int dim_b) const;

  HermOp operator+(const HermOp& o) const;
  HermOp operator-(const HermOp& o) const;
  HermOp operator*(double c) const;

  bool is_psd(double tol = kPsdTol) const;
  double min_eig() const;
  double max_eig() const;
};

inline HermOp operator*(double c, const HermOp& h) { return h * c; }

/** Identity operator with the given cut. */
HermOp identity_op(int da, int db = 1);

/** Replace the matrix by its Hermitian part (m + m^dag)/2. */
Mat hermitize(const Mat& m);

/** Tensor product; the cut concatenates as (da*oa, db*ob) after regrouping
 *  subsystems into (A-parts, B-parts) order. */
HermOp tensor(const HermOp& x, const HermOp& y);

/** n-fold tensor power with subsystems regrouped across the bipartite cut,
 *  so the result acts on (A^n : B^n). */
HermOp tensor_copies(const HermOp& x, int n);

/** Permute tensor factors: dims gives each factor's dimension, perm[i] is the
 *  source slot of output slot i. */
Mat permute_subsystems(const Mat& m, const std::vector<int>& dims,
                       const std::vector<int>& perm);

/** Partial trace over subsystem 0 (A) or 1 (B) of the declared cut. */
HermOp partial_trace(const HermOp& h, int subsystem);

/** Partial transpose on the B side of the declared cut. */
HermOp partial_transpose(const HermOp& h);

/** Trace norm (sum of absolute eigenvalues). */
double trace_norm(const HermOp& h);

/** Root fidelity ||sqrt(x) sqrt(y)||_1 of two PSD operators. */
double fidelity(const HermOp& x, const HermOp& y);

/** Orthonormal Hermitian coordinate basis of the d-by-d Hermitian matrices:
 *  diagonal units first, then real and imaginary off-diagonal pairs scaled
 *  by 1/sqrt(2). Expands Hermitian equality constraints into scalar rows. */
std::vector<Mat> herm_basis(int d);

/** Real embedding H -> [[Re, -Im], [Im, Re]], doubling the side. */
RMat real_embed(const Mat& h);

/** Inverse of real_embed (averages the two copies and hermitizes). */
Mat real_unembed(const RMat& r);

/** True when supp(x) is contained in supp(y), per the 1e-9 eigenvalue rule. */
bool support_contained(const HermOp& x, const HermOp& y);

/** Rank per the support threshold rule. */
int support_rank(const HermOp& h);

}  // namespace qomega

#endif
