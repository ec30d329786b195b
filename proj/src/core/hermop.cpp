/* qomega: certified numerics for entanglement divergences and exponents.
 *
 * Copyright (c) 2026 the qomega authors. Distributed under the MIT license;
 * see the LICENSE file in the repository root.
 */

#include "core/hermop.hpp"

#include <cmath>
#include <numeric>

#include "core/spectral.hpp"

namespace qomega {

const char* err_name(Err code) {
  switch (code) {
    case Err::InvalidOperator: return "InvalidOperator";
    case Err::ZeroOperator: return "ZeroOperator";
    case Err::SupportMismatch: return "SupportMismatch";
    case Err::TraceMismatch: return "TraceMismatch";
    case Err::RankDeficient: return "RankDeficient";
    case Err::SizeGuard: return "SizeGuard";
    case Err::BracketInvalid: return "BracketInvalid";
    case Err::NumericalBreakdown: return "NumericalBreakdown";
    case Err::UnboundedRatio: return "UnboundedRatio";
    case Err::DegenerateAbstention: return "DegenerateAbstention";
    case Err::ZeroSuccessProbability: return "ZeroSuccessProbability";
    case Err::ConversionUnknown: return "ConversionUnknown";
    case Err::ContractViolation: return "ContractViolation";
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
  }
  return "Unknown";
}

HermOp::HermOp(int dim_a, int dim_b, Mat entries) : da(dim_a), db(dim_b), m(std::move(entries)) {
  if (da < 1 || db < 1) throw Error(Err::InvalidOperator, "dimensions must be positive");
  const int d = da * db;
  if (m.rows() != d || m.cols() != d)
    throw Error(Err::InvalidOperator, "matrix side does not match dim_a*dim_b");
  const double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermTol)
    throw Error(Err::InvalidOperator, "matrix is not Hermitian (deviation " + std::to_string(dev) + ")");
  m = hermitize(m);
}

HermOp HermOp::with_cut(int dim_a, int dim_b) const {
  if (dim_a * dim_b != dim())
    throw Error(Err::InvalidOperator, "cut does not match operator dimension");
  HermOp out = *this;
  out.da = dim_a;
  out.db = dim_b;
  return out;
}

HermOp HermOp::operator+(const HermOp& o) const {
  if (o.dim() != dim()) throw Error(Err::InvalidOperator, "dimension mismatch in +");
  HermOp out = *this;
  out.m += o.m;
  return out;
}

HermOp HermOp::operator-(const HermOp& o) const {
  if (o.dim() != dim()) throw Error(Err::InvalidOperator, "dimension mismatch in -");
  HermOp out = *this;
  out.m -= o.m;
  return out;
}

HermOp HermOp::operator*(double c) const {
  HermOp out = *this;
  out.m *= c;
  return out;
}

bool HermOp::is_psd(double tol) const { return min_eig() >= -tol; }

double HermOp::min_eig() const {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double HermOp::max_eig() const {
  Eigen::SelfAdjointEigenSolver<Mat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

HermOp identity_op(int da, int db) {
  return HermOp(da, db, Mat::Identity(da * db, da * db));
}

Mat hermitize(const Mat& m) { return 0.5 * (m + m.adjoint()); }

Mat permute_subsystems(const Mat& m, const std::vector<int>& dims, const std::vector<int>& perm) {
  const int k = static_cast<int>(dims.size());
  if (perm.size() != dims.size())
    throw Error(Err::InvalidOperator, "permutation length mismatch");
  int total = 1;
  for (int d : dims) total *= d;
  if (m.rows() != total || m.cols() != total)
    throw Error(Err::InvalidOperator, "matrix side does not match factor dimensions");

  // strides of the source index layout (row-major over factors)
  std::vector<int> stride(k, 1);
  for (int i = k - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  std::vector<int> out_dims(k);
  for (int i = 0; i < k; ++i) out_dims[i] = dims[perm[i]];
  std::vector<int> out_stride(k, 1);
  for (int i = k - 2; i >= 0; --i) out_stride[i] = out_stride[i + 1] * out_dims[i + 1];

  // map: source composite index -> destination composite index
  std::vector<int> dest(total);
  std::vector<int> digits(k);
  for (int src = 0; src < total; ++src) {
    int rem = src;
    for (int i = 0; i < k; ++i) {
      digits[i] = rem / stride[i];
      rem %= stride[i];
    }
    int dst = 0;
    for (int i = 0; i < k; ++i) dst += digits[perm[i]] * out_stride[i];
    dest[src] = dst;
  }

  Mat out(total, total);
  for (int r = 0; r < total; ++r)
    for (int c = 0; c < total; ++c) out(dest[r], dest[c]) = m(r, c);
  return out;
}

HermOp tensor(const HermOp& x, const HermOp& y) {
  const int dx = x.dim(), dy = y.dim();
  Mat k(dx * dy, dx * dy);
  for (int i = 0; i < dx; ++i)
    for (int j = 0; j < dx; ++j) k.block(i * dy, j * dy, dy, dy) = x.m(i, j) * y.m;
  // regroup (xA xB yA yB) -> (xA yA xB yB)
  Mat g = permute_subsystems(k, {x.da, x.db, y.da, y.db}, {0, 2, 1, 3});
  return HermOp(x.da * y.da, x.db * y.db, std::move(g));
}

HermOp tensor_copies(const HermOp& x, int n) {
  if (n < 1) throw Error(Err::InvalidOperator, "tensor power requires n >= 1");
  HermOp out = x;
  for (int i = 1; i < n; ++i) out = tensor(out, x);
  return out;
}

HermOp partial_trace(const HermOp& h, int subsystem) {
  if (subsystem != 0 && subsystem != 1)
    throw Error(Err::InvalidOperator, "subsystem must be 0 or 1");
  const int da = h.da, db = h.db;
  if (subsystem == 0) {
    Mat out = Mat::Zero(db, db);
    for (int a = 0; a < da; ++a) out += h.m.block(a * db, a * db, db, db);
    return HermOp(db, 1, std::move(out));
  }
  Mat out = Mat::Zero(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j) out(i, j) = h.m.block(i * db, j * db, db, db).trace();
  return HermOp(da, 1, std::move(out));
}

HermOp partial_transpose(const HermOp& h) {
  const int da = h.da, db = h.db;
  Mat out(h.dim(), h.dim());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      out.block(i * db, j * db, db, db) = h.m.block(i * db, j * db, db, db).transpose();
  return HermOp(da, db, std::move(out));
}

double trace_norm(const HermOp& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().sum();
}

double fidelity(const HermOp& x, const HermOp& y) {
  if (x.dim() != y.dim()) throw Error(Err::InvalidOperator, "dimension mismatch in fidelity");
  if (!x.is_psd() || !y.is_psd())
    throw Error(Err::InvalidOperator, "fidelity requires PSD inputs");
  Eigen::SelfAdjointEigenSolver<Mat> ey(y.m);
  RVec ly = ey.eigenvalues().cwiseMax(0.0);
  Mat ry = ey.eigenvectors() * ly.cwiseSqrt().asDiagonal() * ey.eigenvectors().adjoint();
  Mat inner = ry * x.m * ry;
  Eigen::SelfAdjointEigenSolver<Mat> ei(hermitize(inner), Eigen::EigenvaluesOnly);
  RVec li = ei.eigenvalues().cwiseMax(0.0);
  return li.cwiseSqrt().sum();
}

std::vector<Mat> herm_basis(int d) {
  std::vector<Mat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  const double s = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    Mat e = Mat::Zero(d, d);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Mat re = Mat::Zero(d, d);
      re(i, j) = s;
      re(j, i) = s;
      basis.push_back(re);
      Mat im = Mat::Zero(d, d);
      im(i, j) = cxd(0, s);
      im(j, i) = cxd(0, -s);
      basis.push_back(im);
    }
  return basis;
}

RMat real_embed(const Mat& h) {
  const auto n = h.rows();
  RMat out(2 * n, 2 * n);
  out.topLeftCorner(n, n) = h.real();
  out.topRightCorner(n, n) = -h.imag();
  out.bottomLeftCorner(n, n) = h.imag();
  out.bottomRightCorner(n, n) = h.real();
  return out;
}

Mat real_unembed(const RMat& r) {
  const auto n = r.rows() / 2;
  RMat re = 0.5 * (r.topLeftCorner(n, n) + r.bottomRightCorner(n, n));
  RMat im = 0.5 * (r.bottomLeftCorner(n, n) - r.topRightCorner(n, n));
  Mat out = re.cast<cxd>() + cxd(0, 1) * im.cast<cxd>();
  return hermitize(out);
}

bool support_contained(const HermOp& x, const HermOp& y) {
  Eigen::SelfAdjointEigenSolver<Mat> ey(y.m);
  const RVec& ly = ey.eigenvalues();
  const double thr = kSupportTol * std::max(ly.cwiseAbs().maxCoeff(), 1e-300);
  Mat pker(y.dim(), y.dim());
  int nk = 0;
  for (int i = 0; i < y.dim(); ++i)
    if (ly(i) <= thr) pker.col(nk++) = ey.eigenvectors().col(i);
  if (nk == 0) return true;
  Mat k = pker.leftCols(nk);
  Mat leak = k.adjoint() * x.m * k;
  Eigen::SelfAdjointEigenSolver<Mat> el(hermitize(leak), Eigen::EigenvaluesOnly);
  const double lam = el.eigenvalues().cwiseAbs().maxCoeff();
  const double xmax = std::max(std::abs(x.min_eig()), std::abs(x.max_eig()));
  return lam <= kSupportTol * std::max(xmax, 1e-300);
}

int support_rank(const HermOp& h) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h.m, Eigen::EigenvaluesOnly);
  const RVec& l = es.eigenvalues();
  const double thr = kSupportTol * std::max(l.cwiseAbs().maxCoeff(), 1e-300);
  int r = 0;
  for (int i = 0; i < l.size(); ++i)
    if (l(i) > thr) ++r;
  return r;
}

}  // namespace qomega
