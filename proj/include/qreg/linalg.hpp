#pragma once

#include "qreg/types.hpp"

namespace qreg {

// Extremal eigenvalue of a sparse Hermitian matrix by Lanczos iteration with
// full reorthogonalization. Deterministic (fixed internal start vector).
double lanczos_extreme(const SpMat& h, bool largest, double tol = 1e-11, int max_iter = 500);

// Ground eigenpair of a sparse Hermitian matrix; returns the eigenvalue and
// writes the eigenvector.
double lanczos_ground(const SpMat& h, Vec& evec, double tol = 1e-11, int max_iter = 500);

// singular values of a dense matrix, decreasing
Eigen::VectorXd singvals(const Mat& m);

}  // namespace qreg
