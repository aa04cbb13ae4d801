#include "qreg/core.hpp"

#include <Eigen/Eigenvalues>

#include "qreg/linalg.hpp"

namespace qreg {

Vec ket(const Vec& raw, int d) {
  if (log_base(raw.size(), d) < 0)
    throw std::invalid_argument("ket: length is not a power of the local dimension");
  double n = raw.norm();
  if (n == 0) throw std::invalid_argument("ket: zero vector");
  return raw / n;
}

Vec bra(const Vec& raw, int d) { return ket(raw, d).conjugate(); }

Mat ketbra(const StateLike& s) {
  if (const Vec* v = std::get_if<Vec>(&s)) {
    Vec u = nm(*v);
    return u * u.adjoint();
  }
  return nm(std::get<Mat>(s));
}

cxd braket(const Vec& v1, const Vec& v2) {
  if (v1.size() != v2.size()) throw std::invalid_argument("braket: dimension mismatch");
  return v1.dot(v2);
}

cxd braket(const Vec& v1, const Op& op, const Vec& v2) {
  if (v1.size() != op.side()) throw std::invalid_argument("braket: dimension mismatch");
  return v1.dot(op.apply(v2));
}

namespace {

// Tr(op * rho) without forming the product
cxd trace_prod(const Op& op, const Mat& rho) {
  if (op.side() != rho.rows()) throw std::invalid_argument("ex: dimension mismatch");
  cxd t = 0;
  if (op.is_sparse()) {
    const SpMat& m = op.sparse();
    for (int k = 0; k < m.outerSize(); ++k)
      for (SpMat::InnerIterator it(m, k); it; ++it) t += it.value() * rho(it.col(), it.row());
  } else {
    const Mat& m = op.dense();
    for (Index i = 0; i < m.rows(); ++i)
      for (Index j = 0; j < m.cols(); ++j) t += m(i, j) * rho(j, i);
  }
  return t;
}

}  // namespace

cxd ex(const Op& op, const StateLike& s) {
  if (const Vec* v = std::get_if<Vec>(&s)) {
    Vec u = nm(*v);
    if (u.size() != op.side()) throw std::invalid_argument("ex: dimension mismatch");
    return u.dot(op.apply(u));
  }
  return trace_prod(op, nm(std::get<Mat>(s)));
}

double va(const Op& op, const StateLike& s, const NumericPolicy& pol) {
  if (!is_hermitian(op, pol.herm_tol)) throw std::invalid_argument("va: operator is not Hermitian");
  if (const Vec* v = std::get_if<Vec>(&s)) {
    Vec u = nm(*v);
    if (u.size() != op.side()) throw std::invalid_argument("va: dimension mismatch");
    Vec w = op.apply(u);
    double e = u.dot(w).real();
    return w.squaredNorm() - e * e;  // <op^2> = |op v|^2 for Hermitian op
  }
  Mat rho = nm(std::get<Mat>(s));
  double e = trace_prod(op, rho).real();
  Mat op_rho = op.is_sparse() ? Mat(op.sparse() * rho) : Mat(op.dense() * rho);
  double e2 = trace_prod(op, op_rho).real();  // Tr(op * (op*rho))
  return e2 - e * e;
}

Vec nm(const Vec& v) {
  double n = v.norm();
  if (n == 0) throw std::invalid_argument("nm: zero vector");
  return v / n;
}

Mat nm(const Mat& rho) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("nm: matrix is not square");
  cxd t = rho.trace();
  if (std::abs(t) <= default_policy().norm_tol) throw std::invalid_argument("nm: zero trace");
  return rho / t;
}

StateLike nm(const StateLike& s) {
  if (const Vec* v = std::get_if<Vec>(&s)) return nm(*v);
  return nm(std::get<Mat>(s));
}

Vec mkron(const std::vector<Vec>& factors) {
  if (factors.empty()) throw std::invalid_argument("mkron: empty factor list");
  Vec out = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) out = kron2(out, factors[i]);
  return out;
}

Mat mkron(const std::vector<Mat>& factors) {
  if (factors.empty()) throw std::invalid_argument("mkron: empty factor list");
  Mat out = factors.front();
  for (size_t i = 1; i < factors.size(); ++i) out = kron2(out, factors[i]);
  return out;
}

Op mkron(const std::vector<Op>& factors) {
  if (factors.empty()) throw std::invalid_argument("mkron: empty factor list");
  bool all_sparse = true;
  for (const Op& f : factors) all_sparse = all_sparse && f.is_sparse();
  if (all_sparse) {
    SpMat out = factors.front().sparse();
    for (size_t i = 1; i < factors.size(); ++i) out = kron2(out, factors[i].sparse());
    return Op(std::move(out));
  }
  Mat out = factors.front().make_dense();
  for (size_t i = 1; i < factors.size(); ++i) out = kron2(out, factors[i].make_dense());
  return Op(std::move(out));
}

Vec pkron(const Vec& v, int n) {
  if (n < 1) throw std::invalid_argument("pkron: power must be >= 1");
  return mkron(std::vector<Vec>(n, v));
}

Mat pkron(const Mat& m, int n) {
  if (n < 1) throw std::invalid_argument("pkron: power must be >= 1");
  return mkron(std::vector<Mat>(n, m));
}

Op pkron(const Op& m, int n) {
  if (n < 1) throw std::invalid_argument("pkron: power must be >= 1");
  return mkron(std::vector<Op>(n, m));
}

Vec qvec(const RegisterShape& shape) { return Vec::Zero(shape.dim()); }

Op qeye(const RegisterShape& shape, Storage st) {
  if (st == Storage::sparse) return Op(eye_sparse(shape.dim()));
  return Op(eye_dense(shape.dim()));
}

namespace {

double extremal_eig(const Op& m, bool largest, const NumericPolicy& pol) {
  if (m.is_sparse()) {
    if (is_hermitian(m, pol.herm_tol)) return lanczos_extreme(m.sparse(), largest);
    return extremal_eig(Op(m.make_dense(pol)), largest, pol);
  }
  if (is_hermitian(m, pol.herm_tol)) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m.dense(), Eigen::EigenvaluesOnly);
    return largest ? es.eigenvalues().maxCoeff() : es.eigenvalues().minCoeff();
  }
  Eigen::ComplexEigenSolver<Mat> es(m.dense(), false);
  Eigen::VectorXd re = es.eigenvalues().real();
  return largest ? re.maxCoeff() : re.minCoeff();
}

}  // namespace

double maxeig(const Op& m, const NumericPolicy& pol) { return extremal_eig(m, true, pol); }

double mineig(const Op& m, const NumericPolicy& pol) { return extremal_eig(m, false, pol); }

cxd trace2(const Op& m) {
  if (m.is_sparse()) {
    const SpMat& s = m.sparse();
    cxd t = 0;
    for (int k = 0; k < s.outerSize(); ++k)
      for (SpMat::InnerIterator it(s, k); it; ++it) t += it.value() * s.coeff(it.col(), it.row());
    return t;
  }
  const Mat& d = m.dense();
  cxd t = 0;
  for (Index i = 0; i < d.rows(); ++i)
    for (Index j = 0; j < d.cols(); ++j) t += d(i, j) * d(j, i);
  return t;
}

double trnorm(const Op& m) { return singvals(m.make_dense()).sum(); }

Op comm(const Op& a, const Op& b) { return a * b - b * a; }

Mat addnoise(const StateLike& s, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("addnoise: p must lie in [0,1]");
  Mat rho = nm(as_dm(s));
  Index dim = rho.rows();
  return p * rho + ((1.0 - p) / static_cast<double>(dim)) * Mat::Identity(dim, dim);
}

std::int64_t binom(int m, int n) {
  if (m < 0 || n < 0 || m > n) throw std::invalid_argument("binom: need 0 <= m <= n");
  unsigned __int128 r = 1;
  for (int i = 1; i <= m; ++i) {
    r = r * static_cast<unsigned>(n - m + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error("binom: overflow");
  }
  return static_cast<std::int64_t>(r);
}

namespace {

Mat swap_two_qudits(int d) {
  Index dim = static_cast<Index>(d) * d;
  Mat s = Mat::Zero(dim, dim);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s(b * d + a, a * d + b) = 1;
  return s;
}

}  // namespace

Mat proj_sym(const RegisterShape& shape) {
  if (shape.n != 2) throw std::invalid_argument("proj_sym: implemented for two qudits only");
  Index dim = shape.dim();
  return 0.5 * (Mat::Identity(dim, dim) + swap_two_qudits(shape.d));
}

Mat proj_asym(const RegisterShape& shape) {
  if (shape.n != 2) throw std::invalid_argument("proj_asym: implemented for two qudits only");
  Index dim = shape.dim();
  return 0.5 * (Mat::Identity(dim, dim) - swap_two_qudits(shape.d));
}

}  // namespace qreg
