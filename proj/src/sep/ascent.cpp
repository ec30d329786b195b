/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "sep/ascent.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "core/sampling.hpp"

namespace qomega {

namespace {

constexpr double kSweepTol = 1e-9;
constexpr int kMaxSweeps = 200;

// Contract the fixed factor: with b fixed on the B side the objective reduces
// to a quadratic form in a alone, and symmetrically for a fixed.
Mat contract_b(const HermOp& op, const CVec& b) {
  Mat out = Mat::Zero(op.da, op.da);
  for (int i = 0; i < op.da; ++i)
    for (int j = 0; j < op.da; ++j) {
      cxd acc = 0.0;
      for (int k = 0; k < op.db; ++k)
        for (int l = 0; l < op.db; ++l)
          acc += std::conj(b[k]) * op.m(i * op.db + k, j * op.db + l) * b[l];
      out(i, j) = acc;
    }
  return hermitize(out);
}

Mat contract_a(const HermOp& op, const CVec& a) {
  Mat out = Mat::Zero(op.db, op.db);
  for (int k = 0; k < op.db; ++k)
    for (int l = 0; l < op.db; ++l) {
      cxd acc = 0.0;
      for (int i = 0; i < op.da; ++i)
        for (int j = 0; j < op.da; ++j)
          acc += std::conj(a[i]) * op.m(i * op.db + k, j * op.db + l) * a[j];
      out(k, l) = acc;
    }
  return hermitize(out);
}

double form_value(const HermOp& op, const CVec& a, const CVec& b) {
  CVec x(op.dim());
  for (int i = 0; i < op.da; ++i)
    for (int k = 0; k < op.db; ++k) x[i * op.db + k] = a[i] * b[k];
  return (x.adjoint() * op.m * x)(0, 0).real();
}

struct RayleighStep {
  CVec vec;
  double value = 0.0;
  bool unbounded = false;
};

// Top generalized eigenvector of the pencil (M, N) with N PSD and possibly
// singular; a kernel direction of N carrying positive M-weight certifies an
// unbounded ratio.
RayleighStep step_max(const Mat& mc, const Mat& nc) {
  RayleighStep out;
  const int d = static_cast<int>(mc.rows());
  Eigen::SelfAdjointEigenSolver<Mat> en(nc);
  const RVec& w = en.eigenvalues();
  const double thr = 1e-12 * std::max(w.cwiseAbs().maxCoeff(), 1e-300);
  const double mscale = mc.norm() + 1e-300;
  Mat kproj = Mat::Zero(d, d);
  Mat winv = Mat::Zero(d, d);
  bool has_kernel = false;
  for (int i = 0; i < d; ++i) {
    const Mat vvt = en.eigenvectors().col(i) * en.eigenvectors().col(i).adjoint();
    if (w[i] <= thr) {
      kproj += vvt;
      has_kernel = true;
    } else {
      winv += vvt / std::sqrt(w[i]);
    }
  }
  if (has_kernel) {
    Eigen::SelfAdjointEigenSolver<Mat> ek(hermitize(kproj * mc * kproj));
    if (ek.eigenvalues().maxCoeff() > 1e-10 * mscale) {
      out.unbounded = true;
      out.vec = ek.eigenvectors().col(d - 1).normalized();
      out.value = std::numeric_limits<double>::infinity();
      return out;
    }
  }
  Eigen::SelfAdjointEigenSolver<Mat> eh(hermitize(winv * mc * winv));
  out.value = eh.eigenvalues().maxCoeff();
  out.vec = (winv * eh.eigenvectors().col(d - 1)).normalized();
  if (!(out.vec.norm() > 0.5)) out.vec = en.eigenvectors().col(d - 1);
  return out;
}

// Closest product factors of a bipartite vector (top Schmidt pair).
void schmidt_factors(const CVec& v, int da, int db, CVec& a, CVec& b) {
  Mat resh(da, db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k) resh(i, k) = v[i * db + k];
  Eigen::JacobiSVD<Mat> svd(resh, Eigen::ComputeThinU | Eigen::ComputeThinV);
  a = svd.matrixU().col(0);
  b = svd.matrixV().col(0).conjugate();
}

}  // namespace

HermOp ProductPoint::projector() const {
  const int da = static_cast<int>(a.size());
  const int db = static_cast<int>(b.size());
  CVec x(da * db);
  for (int i = 0; i < da; ++i)
    for (int k = 0; k < db; ++k) x[i * db + k] = a[i] * b[k];
  return HermOp(da, db, x * x.adjoint());
}

ProductPoint max_product_ratio(const HermOp& m_op, const HermOp& n_op,
                               int restarts, std::uint64_t seed) {
  const int da = m_op.da;
  const int db = m_op.db;
  const double mscale = m_op.m.norm() + 1e-300;
  const double nscale = n_op.m.norm() + 1e-300;
  Rng rng(seed);

  ProductPoint best;
  best.value = -std::numeric_limits<double>::infinity();

  auto consider_inf = [&](const CVec& a, const CVec& b) {
    const double num = form_value(m_op, a, b);
    const double den = form_value(n_op, a, b);
    if (den <= 1e-12 * nscale && num > 1e-9 * mscale) {
      best.a = a;
      best.b = b;
      best.value = std::numeric_limits<double>::infinity();
      return true;
    }
    return false;
  };

  std::vector<std::pair<CVec, CVec>> starts;
  {
    Eigen::SelfAdjointEigenSolver<Mat> em(m_op.m);
    CVec sa, sb;
    schmidt_factors(em.eigenvectors().col(m_op.dim() - 1), da, db, sa, sb);
    starts.emplace_back(sa, sb);
  }
  for (int r = 0; r < restarts; ++r)
    starts.emplace_back(random_pure_vector(da, rng), random_pure_vector(db, rng));

  for (auto& [a, b] : starts) {
    if (consider_inf(a, b)) return best;
    double prev = -std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      RayleighStep sa = step_max(contract_b(m_op, b), contract_b(n_op, b));
      if (sa.unbounded) {
        a = sa.vec;
        if (consider_inf(a, b)) return best;
      } else {
        a = sa.vec;
      }
      RayleighStep sb = step_max(contract_a(m_op, a), contract_a(n_op, a));
      if (sb.unbounded) {
        b = sb.vec;
        if (consider_inf(a, b)) return best;
        break;
      }
      b = sb.vec;
      if (sb.value - prev <= kSweepTol * std::max(1.0, std::abs(sb.value))) {
        prev = sb.value;
        break;
      }
      prev = sb.value;
    }
    const double num = form_value(m_op, a, b);
    const double den = form_value(n_op, a, b);
    if (den > 1e-12 * nscale && num / den > best.value) {
      best.a = a;
      best.b = b;
      best.value = num / den;
    }
  }
  if (!std::isfinite(best.value) && best.a.size() == 0)
    throw Error(Err::NumericalBreakdown, "product ratio ascent found no valid product");
  return best;
}

ProductPoint min_product_form(const HermOp& g, int restarts, std::uint64_t seed) {
  const int da = g.da;
  const int db = g.db;
  Rng rng(seed);

  std::vector<std::pair<CVec, CVec>> starts;
  {
    Eigen::SelfAdjointEigenSolver<Mat> eg(g.m);
    CVec sa, sb;
    schmidt_factors(eg.eigenvectors().col(0), da, db, sa, sb);
    starts.emplace_back(sa, sb);
  }
  for (int r = 0; r < restarts; ++r)
    starts.emplace_back(random_pure_vector(da, rng), random_pure_vector(db, rng));

  ProductPoint best;
  best.value = std::numeric_limits<double>::infinity();
  for (auto& [a, b] : starts) {
    double prev = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      Eigen::SelfAdjointEigenSolver<Mat> ea(contract_b(g, b));
      a = ea.eigenvectors().col(0);
      Eigen::SelfAdjointEigenSolver<Mat> eb(contract_a(g, a));
      b = eb.eigenvectors().col(0);
      const double cur = eb.eigenvalues()[0];
      if (prev - cur <= kSweepTol * std::max(1.0, std::abs(cur))) {
        prev = cur;
        break;
      }
      prev = cur;
    }
    const double val = form_value(g, a, b);
    if (val < best.value) {
      best.a = a;
      best.b = b;
      best.value = val;
    }
  }
  return best;
}

}  // namespace qomega
