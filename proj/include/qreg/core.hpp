#pragma once

#include "qreg/op.hpp"
#include "qreg/types.hpp"

namespace qreg {

// Dirac-notation constructors. ket normalizes; bra is its conjugate.
Vec ket(const Vec& raw, int d = 2);
Vec bra(const Vec& raw, int d = 2);
Mat ketbra(const StateLike& s);          // rank-1 projector / trace-normalized copy
cxd braket(const Vec& v1, const Vec& v2);              // conj(v1).v2, no normalization
cxd braket(const Vec& v1, const Op& op, const Vec& v2);

// expectation value and variance (state normalized first)
cxd ex(const Op& op, const StateLike& s);
double va(const Op& op, const StateLike& s, const NumericPolicy& pol = default_policy());

// normalization; zero input is an error
Vec nm(const Vec& v);
Mat nm(const Mat& rho);
StateLike nm(const StateLike& s);

// Kronecker products over lists; first factor is most significant
Vec mkron(const std::vector<Vec>& factors);
Mat mkron(const std::vector<Mat>& factors);
Op mkron(const std::vector<Op>& factors);
Vec pkron(const Vec& v, int n);
Mat pkron(const Mat& m, int n);
Op pkron(const Op& m, int n);

// zero vector / identity for a register
Vec qvec(const RegisterShape& shape);
Op qeye(const RegisterShape& shape, Storage st = Storage::dense);

// extremal real parts of eigenvalues; sparse Hermitian input uses a Lanczos path
double maxeig(const Op& m, const NumericPolicy& pol = default_policy());
double mineig(const Op& m, const NumericPolicy& pol = default_policy());

cxd trace2(const Op& m);     // Tr(m^2)
double trnorm(const Op& m);  // sum of singular values, via SVD
Op comm(const Op& a, const Op& b);

// p*rho + (1-p)*I/dim
Mat addnoise(const StateLike& s, double p);

std::int64_t binom(int m, int n);  // n choose m

// projectors onto the (anti)symmetric subspace of two d-level qudits
Mat proj_sym(const RegisterShape& shape);
Mat proj_asym(const RegisterShape& shape);

}  // namespace qreg
