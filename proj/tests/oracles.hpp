#pragma once

// Brute-force reference implementations used only by the test suite. These
// deliberately avoid the library's index machinery so that every comparison
// crosses two independent code paths.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_y() { Mat m(2, 2); m << 0, cxd(0, -1), cxd(0, 1), 0; return m; }
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat eye2() { return Mat::Identity(2, 2); }

// digit of qudit k (1-based, least significant first) in index idx
inline int dig(long idx, int k, int d) {
  for (int j = 1; j < k; ++j) idx /= d;
  return static_cast<int>(idx % d);
}

inline long powl(int d, int n) {
  long r = 1;
  for (int i = 0; i < n; ++i) r *= d;
  return r;
}

// reduced density matrix over the kept qudits, naive quadruple loop
inline Mat keep_oracle(const Mat& rho, std::vector<int> kept, int n, int d) {
  std::sort(kept.begin(), kept.end());
  const long dim = powl(d, n);
  const long dk = powl(d, static_cast<int>(kept.size()));
  Mat out = Mat::Zero(dk, dk);
  auto subindex = [&](long full) {
    long s = 0, w = 1;
    for (int q : kept) {
      s += dig(full, q, d) * w;
      w *= d;
    }
    return s;
  };
  auto restindex = [&](long full) {
    long s = 0, w = 1;
    for (int q = 1; q <= n; ++q) {
      if (std::find(kept.begin(), kept.end(), q) != kept.end()) continue;
      s += dig(full, q, d) * w;
      w *= d;
    }
    return s;
  };
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j)
      if (restindex(i) == restindex(j)) out(subindex(i), subindex(j)) += rho(i, j);
  return out;
}

inline Mat keep_oracle(const Vec& v, const std::vector<int>& kept, int n, int d) {
  Vec u = v / v.norm();
  return keep_oracle(Mat(u * u.adjoint()), kept, n, d);
}

// partial transpose on the listed qudits, naive digit surgery
inline Mat pt_oracle(const Mat& rho, const std::vector<int>& list, int n, int d) {
  const long dim = powl(d, n);
  Mat out(dim, dim);
  for (long i = 0; i < dim; ++i)
    for (long j = 0; j < dim; ++j) {
      long ti = 0, tj = 0, w = 1;
      for (int q = 1; q <= n; ++q) {
        bool flip = std::find(list.begin(), list.end(), q) != list.end();
        ti += (flip ? dig(j, q, d) : dig(i, q, d)) * w;
        tj += (flip ? dig(i, q, d) : dig(j, q, d)) * w;
        w *= d;
      }
      out(ti, tj) = rho(i, j);
    }
  return out;
}

// largest squared Schmidt coefficient across one explicit bipartition
inline double schmidt_max_sq(const Vec& v, const std::vector<int>& side, int n) {
  const long dim = powl(2, n);
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q)
    if (std::find(side.begin(), side.end(), q) == side.end()) rest.push_back(q);
  Mat m = Mat::Zero(powl(2, static_cast<int>(side.size())), powl(2, static_cast<int>(rest.size())));
  for (long i = 0; i < dim; ++i) {
    long r = 0, c = 0, wr = 1, wc = 1;
    for (int q : side) { r += dig(i, q, 2) * wr; wr *= 2; }
    for (int q : rest) { c += dig(i, q, 2) * wc; wc *= 2; }
    m(r, c) = v(i);
  }
  Eigen::JacobiSVD<Mat> svd(m);
  double s = svd.singularValues()(0);
  return s * s;
}

// deterministic xorshift-based pseudo-random values for test inputs
struct TestRng {
  uint64_t s;
  explicit TestRng(uint64_t seed) : s(seed ^ 0x9E3779B97F4A7C15ULL) {}
  double uniform() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return static_cast<double>(s >> 11) * 0x1p-53;
  }
  double centered() { return 2 * uniform() - 1; }
  cxd c() { return {centered(), centered()}; }
  Vec vec(long n) {
    Vec v(n);
    for (long i = 0; i < n; ++i) v(i) = c();
    return v;
  }
  Mat mat(long n) {
    Mat m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m(i, j) = c();
    return m;
  }
  Mat herm(long n) {
    Mat m = mat(n);
    return 0.5 * (m + Mat(m.adjoint()));
  }
  Mat dm(long n) {
    Mat m = mat(n);
    Mat r = m * m.adjoint();
    return r / r.trace();
  }
};

}  // namespace oracle
