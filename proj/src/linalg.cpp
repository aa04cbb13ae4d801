#include "qreg/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qreg {

namespace {

uint64_t splitmix(uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// fixed pseudo-random start vector so results are reproducible
Vec start_vector(Index n) {
  uint64_t s = 20177;
  Vec v(n);
  for (Index i = 0; i < n; ++i) {
    double re = static_cast<double>(splitmix(s) >> 11) * 0x1p-52 - 1.0;
    double im = static_cast<double>(splitmix(s) >> 11) * 0x1p-52 - 1.0;
    v(i) = cxd(re, im);
  }
  v.normalize();
  return v;
}

struct LanczosResult {
  double value;
  Vec vector;
};

LanczosResult lanczos(const SpMat& h, bool largest, double tol, int max_iter, bool want_vector) {
  const Index n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("lanczos: matrix must be square");
  if (n == 1) return {h.coeff(0, 0).real(), Vec::Ones(1)};

  const int m_cap = static_cast<int>(std::min<Index>(max_iter, n));
  std::vector<Vec> q;
  q.reserve(m_cap + 1);
  q.push_back(start_vector(n));

  std::vector<double> alpha, beta;  // beta[j] couples q[j] and q[j+1]
  const double scale = [&] {
    double s = 0;
    for (int k = 0; k < h.outerSize(); ++k)
      for (SpMat::InnerIterator it(h, k); it; ++it) s = std::max(s, std::abs(it.value()));
    return std::max(s, 1.0);
  }();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  int iters = 0;
  for (int j = 0; j < m_cap; ++j) {
    Vec w = h * q[j];
    double a = q[j].dot(w).real();
    alpha.push_back(a);
    w -= a * q[j];
    if (j > 0) w -= beta[j - 1] * q[j - 1];
    // full reorthogonalization, applied twice to hold orthogonality at machine level
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& qi : q) w -= qi.dot(w) * qi;
    double b = w.norm();
    iters = j + 1;
    if (b < 1e-13 * scale) break;  // invariant subspace reached
    beta.push_back(b);
    q.push_back(w / b);

    if (j >= 4 && (j % 5 == 0 || j == m_cap - 1)) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(iters, iters);
      for (int i = 0; i < iters; ++i) t(i, i) = alpha[i];
      for (int i = 0; i + 1 < iters; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
      es.compute(t);
      int pick = largest ? iters - 1 : 0;
      double resid = b * std::abs(es.eigenvectors()(iters - 1, pick));
      if (resid < tol * scale) break;
    }
  }

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(iters, iters);
  for (int i = 0; i < iters; ++i) t(i, i) = alpha[i];
  for (int i = 0; i + 1 < iters; ++i) t(i, i + 1) = t(i + 1, i) = beta[i];
  es.compute(t);
  int pick = largest ? iters - 1 : 0;

  LanczosResult out{es.eigenvalues()(pick), Vec()};
  if (want_vector) {
    Vec v = Vec::Zero(n);
    for (int i = 0; i < iters; ++i) v += es.eigenvectors()(i, pick) * q[i];
    v.normalize();
    out.vector = std::move(v);
  }
  return out;
}

}  // namespace

double lanczos_extreme(const SpMat& h, bool largest, double tol, int max_iter) {
  return lanczos(h, largest, tol, max_iter, false).value;
}

double lanczos_ground(const SpMat& h, Vec& evec, double tol, int max_iter) {
  LanczosResult r = lanczos(h, false, tol, max_iter, true);
  evec = std::move(r.vector);
  return r.value;
}

Eigen::VectorXd singvals(const Mat& m) {
  if (m.rows() > 32 || m.cols() > 32) {
    Eigen::BDCSVD<Mat> svd(m);
    return svd.singularValues();
  }
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues();
}

}  // namespace qreg
