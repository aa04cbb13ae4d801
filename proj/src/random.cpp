#include "qreg/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/QR>

#include "qreg/core.hpp"
#include "qreg/op.hpp"
#include "qreg/permute.hpp"

namespace qreg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double sqsum_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs2().sum(); }

// U x U x ... x U across n qudits
Mat multilateral(const Mat& u, int n) {
  Mat w = u;
  for (int k = 1; k < n; ++k) w = kron2(w, u);
  return w;
}

void check_dense_target(Index side, const char* who) {
  if (side > default_policy().max_dense_side)
    throw std::invalid_argument(std::string(who) + ": dense side " + std::to_string(side) +
                                " exceeds the dense cap");
}

}  // namespace

double RandomSource::uniform() {
  // top 53 bits of the engine output, exact double in [0, 1)
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RandomSource::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 1.0 - uniform();  // (0, 1], keeps the log finite
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

Vec rvec(const RegisterShape& shape, RandomSource& rng) {
  Index dim = shape.dim();
  Vec v(dim);
  for (Index i = 0; i < dim; ++i) {
    double re = rng.normal();
    double im = rng.normal();
    v(i) = cxd(re, im);
  }
  double norm = v.norm();
  if (norm == 0.0) return rvec(shape, rng);  // absurdly unlikely, retry
  return v / norm;
}

Vec rproduct(const RegisterShape& shape, RandomSource& rng) {
  std::vector<Vec> factors;
  factors.reserve(shape.n);
  for (int k = 0; k < shape.n; ++k) factors.push_back(rvec({1, shape.d}, rng));
  return mkron(factors);
}

Mat rdmat(const RegisterShape& shape, RandomSource& rng) {
  check_dense_target(shape.dim(), "rdmat");
  Vec pure = rvec({2 * shape.n, shape.d}, rng);
  QuditList kept(shape.n);
  for (int k = 0; k < shape.n; ++k) kept[k] = k + 1;
  return keep(StateLike(pure), kept, shape.d);
}

Mat runitary(const RegisterShape& shape, RandomSource& rng) {
  Index m = shape.dim();
  check_dense_target(m, "runitary");
  Mat a(m, m);
  for (Index col = 0; col < m; ++col)
    for (Index row = 0; row < m; ++row) {
      double re = rng.normal();
      double im = rng.normal();
      a(row, col) = cxd(re, im);
    }
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ() * Mat::Identity(m, m);
  Mat r = qr.matrixQR();
  // rotate each column so the implied triangular factor has a real-positive
  // diagonal; without this the distribution is biased away from Haar
  for (Index j = 0; j < m; ++j) {
    cxd rj = r(j, j);
    double mag = std::abs(rj);
    q.col(j) *= mag > 0.0 ? rj / mag : cxd(1.0, 0.0);
  }
  return q;
}

TwirlResult twirl(const StateLike& rho, RandomSource& rng, int d, int n_it) {
  Mat in = as_dm(rho);
  int n = qsize(in, d);
  Mat out = in;
  for (int it = 0; it < n_it; ++it) {
    Mat w = multilateral(runitary({1, d}, rng), n);
    out = 0.5 * (out + w * out * w.adjoint());
  }
  return {out, sqsum_diff(in, out)};
}

Twirl2Result twirl2(const StateLike& rho, RandomSource& rng, int d, int n_it) {
  Mat in = as_dm(rho);
  int n = qsize(in, d);
  Twirl2Result res;
  res.unitary = Mat::Identity(d, d);
  for (int it = 0; it < n_it; ++it) {
    Mat u = runitary({1, d}, rng);
    Mat w = multilateral(u, n);
    double delta = sqsum_diff(in, w * in * w.adjoint());
    if (delta > res.difference) {
      res.difference = delta;
      res.unitary = u;
    }
  }
  return res;
}

}  // namespace qreg
