#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace qreg {

using cxd = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using SpMat = Eigen::SparseMatrix<cxd>;
using Index = Eigen::Index;

// Tolerances and size caps used across the library. One record, immutable
// defaults; pass a custom instance to override.
struct NumericPolicy {
  double herm_tol = 1e-9;   // Hermiticity / PSD checks
  double norm_tol = 1e-12;  // normalization checks
  Index max_dense_side = 1 << 13;   // largest side for dense materialization
  Index max_sparse_side = 1 << 26;  // largest side for sparse construction
};

const NumericPolicy& default_policy();

struct RegisterShape {
  int n = 1;  // qudit count
  int d = 2;  // local dimension
  RegisterShape(int n_, int d_ = 2);
  Index dim() const;  // d^n, overflow-checked against the sparse cap
};

// d^n with overflow check; throws std::invalid_argument on overflow
Index ipow(int d, int n);

// exact log_d; returns -1 when len is not a positive power of d
int log_base(Index len, int d);

// digit of qudit k (1-based, least significant) in basis index idx
inline int digit(Index idx, int k, int d) {
  for (int j = 1; j < k; ++j) idx /= d;
  return static_cast<int>(idx % d);
}

// A state argument that may be a pure-state vector or a density matrix.
using StateLike = std::variant<Vec, Mat>;

// number of qudits of a state (vector length or matrix side must be d^N)
int qsize(const Vec& v, int d = 2);
int qsize(const Mat& m, int d = 2);
int qsize(const StateLike& s, int d = 2);

// coerce to a density matrix: vectors become nm(v)*nm(v)^dagger
Mat as_dm(const StateLike& s);

}  // namespace qreg
