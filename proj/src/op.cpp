#include "qreg/op.hpp"

namespace qreg {

Op::Op(Mat m) : m_(std::move(m)) {
  const Mat& d = std::get<Mat>(m_);
  if (d.rows() != d.cols()) throw std::invalid_argument("Op: matrix must be square");
}

Op::Op(SpMat m) : m_(std::move(m)) {
  SpMat& s = std::get<SpMat>(m_);
  if (s.rows() != s.cols()) throw std::invalid_argument("Op: matrix must be square");
  s.makeCompressed();
}

Index Op::side() const {
  return std::visit([](const auto& m) { return m.rows(); }, m_);
}

const Mat& Op::dense() const {
  if (is_sparse()) throw std::runtime_error("Op: dense access on sparse storage");
  return std::get<Mat>(m_);
}

const SpMat& Op::sparse() const {
  if (!is_sparse()) throw std::runtime_error("Op: sparse access on dense storage");
  return std::get<SpMat>(m_);
}

Mat Op::make_dense(const NumericPolicy& pol) const {
  if (side() > pol.max_dense_side)
    throw std::runtime_error("Op: dense materialization exceeds the size cap");
  if (is_sparse()) return Mat(sparse());
  return dense();
}

SpMat Op::make_sparse() const {
  if (is_sparse()) return sparse();
  return dense().sparseView();
}

Vec Op::apply(const Vec& v) const {
  if (v.size() != side()) throw std::invalid_argument("Op: vector dimension mismatch");
  if (is_sparse()) return sparse() * v;
  return dense() * v;
}

Op Op::adjoint() const {
  if (is_sparse()) return Op(SpMat(sparse().adjoint()));
  return Op(Mat(dense().adjoint()));
}

namespace {

void check_same_side(const Op& a, const Op& b) {
  if (a.side() != b.side()) throw std::invalid_argument("Op: dimension mismatch");
}

}  // namespace

Op operator+(const Op& a, const Op& b) {
  check_same_side(a, b);
  if (a.is_sparse() && b.is_sparse()) return Op(SpMat(a.sparse() + b.sparse()));
  return Op(Mat(a.make_dense() + b.make_dense()));
}

Op operator-(const Op& a, const Op& b) {
  check_same_side(a, b);
  if (a.is_sparse() && b.is_sparse()) return Op(SpMat(a.sparse() - b.sparse()));
  return Op(Mat(a.make_dense() - b.make_dense()));
}

Op operator*(const Op& a, const Op& b) {
  check_same_side(a, b);
  if (a.is_sparse() && b.is_sparse()) return Op(SpMat(a.sparse() * b.sparse()));
  return Op(Mat(a.make_dense() * b.make_dense()));
}

Op operator*(cxd s, const Op& a) {
  if (a.is_sparse()) return Op(SpMat(s * a.sparse()));
  return Op(Mat(s * a.dense()));
}

Op operator*(double s, const Op& a) { return cxd(s, 0) * a; }

Op operator-(const Op& a) { return -1.0 * a; }

Op to_sparse(const Op& m) { return Op(m.make_sparse()); }

Op to_dense(const Op& m, const NumericPolicy& pol) { return Op(m.make_dense(pol)); }

Mat kron2(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SpMat kron2(const SpMat& a, const SpMat& b) {
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
          trips.emplace_back(ia.row() * b.rows() + ib.row(),
                             ia.col() * b.cols() + ib.col(),
                             ia.value() * ib.value());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

Vec kron2(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

Mat eye_dense(Index side) { return Mat::Identity(side, side); }

SpMat eye_sparse(Index side) {
  SpMat id(side, side);
  id.setIdentity();
  return id;
}

bool is_hermitian(const Op& m, double tol) {
  if (m.is_sparse()) {
    SpMat diff = SpMat(m.sparse() - SpMat(m.sparse().adjoint()));
    for (int k = 0; k < diff.outerSize(); ++k)
      for (SpMat::InnerIterator it(diff, k); it; ++it)
        if (std::abs(it.value()) > tol) return false;
    return true;
  }
  return (m.dense() - m.dense().adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Op& a, const Op& b) {
  if (a.side() != b.side()) throw std::invalid_argument("max_abs_diff: dimension mismatch");
  if (a.is_sparse() && b.is_sparse()) {
    SpMat diff = SpMat(a.sparse() - b.sparse());
    double worst = 0;
    for (int k = 0; k < diff.outerSize(); ++k)
      for (SpMat::InnerIterator it(diff, k); it; ++it)
        worst = std::max(worst, std::abs(it.value()));
    return worst;
  }
  Mat diff = a.make_dense() - b.make_dense();
  return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

}  // namespace qreg
