#pragma once

#include "qreg/types.hpp"

namespace qreg {

enum class Storage { dense, sparse };

// Square operator with dense or sparse storage. Builders propagate the
// storage of their inputs; both storages produce entrywise-identical values.
class Op {
 public:
  Op(Mat m);      // implicit on purpose: free functions accept raw matrices
  Op(SpMat m);

  Storage store() const { return std::holds_alternative<SpMat>(m_) ? Storage::sparse : Storage::dense; }
  bool is_sparse() const { return store() == Storage::sparse; }
  Index side() const;

  const Mat& dense() const;    // throws when sparse
  const SpMat& sparse() const; // throws when dense

  Mat make_dense(const NumericPolicy& pol = default_policy()) const;  // copy, cap-checked
  SpMat make_sparse() const;

  Vec apply(const Vec& v) const;  // op * v

  Op adjoint() const;

  friend Op operator+(const Op& a, const Op& b);
  friend Op operator-(const Op& a, const Op& b);
  friend Op operator*(const Op& a, const Op& b);
  friend Op operator*(cxd s, const Op& a);
  friend Op operator*(double s, const Op& a);
  friend Op operator-(const Op& a);

 private:
  std::variant<Mat, SpMat> m_;
};

// storage conversions, entry-exact in both directions
Op to_sparse(const Op& m);
Op to_dense(const Op& m, const NumericPolicy& pol = default_policy());

// Kronecker products on plain matrices; left factor is most significant.
Mat kron2(const Mat& a, const Mat& b);
SpMat kron2(const SpMat& a, const SpMat& b);
Vec kron2(const Vec& a, const Vec& b);

// identity of a given side in either storage
Mat eye_dense(Index side);
SpMat eye_sparse(Index side);

// Frobenius check helpers used by tests and validation paths
bool is_hermitian(const Op& m, double tol);
double max_abs_diff(const Op& a, const Op& b);

}  // namespace qreg
