#pragma once

#include <array>
#include <vector>

#include "qreg/op.hpp"
#include "qreg/permute.hpp"
#include "qreg/random.hpp"
#include "qreg/types.hpp"

namespace qreg {

// Partial transpose on the listed qudits. The state is trace-normalized
// first unless normalize is false.
Mat pt(const StateLike& s, const QuditList& list, int d = 2,
       bool normalize = true);

// Sum of the magnitudes of the negative eigenvalues of the partial
// transpose. Zero for all separable states, 1/2 for a Bell pair.
double negativity(const StateLike& s, const QuditList& list, int d = 2);

// Realignment of a square matrix across its equal bipartition: with row
// index (a,b) and column index (a',b'), entry ((a,b),(a',b')) moves to row
// (a,a'), column (b,b'). The side must be a perfect square.
Mat realign(const Op& m);

// Generalized realignment: m is read as a tensor with 2N qudit indices, the
// row block followed by the column block, and the indices are rearranged by
// a 2N-entry permutation list (same convention as reorder). The identity
// list returns m; swapping a row index with its column partner transposes
// that qudit.
Mat mrealign(const Op& m, const Perm& iperm, int d = 2);

// Trace norm of the realigned density matrix, computed across the low/high
// half split. Exceeds 1 only for entangled states; detects some PPT states.
double ccnr(const StateLike& s);

// Wootters concurrence of a two-qubit state.
double concurrence(const StateLike& rho);

// Schmidt coefficients of a pure qubit-register state across the given
// bipartition, in decreasing order. Their squares sum to one.
Eigen::VectorXd schmidt(const Vec& v, const QuditList& mask);

// Largest squared Schmidt coefficient over every bipartition of the
// register. One exactly when v is a product state across some cut.
double overlapb(const Vec& v);

// Margins of the three optimal spin-squeezing criteria, evaluated in the
// frame that diagonalizes the collective-spin covariance matrix. A negative
// entry certifies entanglement; fmin is the smallest of the three.
struct SpinSqueezingReport {
  double fmin = 0;
  std::array<double, 3> f123{};
};

SpinSqueezingReport optspinsq(const StateLike& rho);

// Knobs for the stochastic separable-maximum searches: independent random
// product trials first, then greedy refinement of the best one.
struct SearchParams {
  int n_phase1 = 10000;
  int n_phase2 = 20000;
  double step_const = 0.005;  // perturbation scale per refinement step
};

struct SepSearchResult {
  double value = 0;
  std::vector<Vec> factors;  // per-qudit states, qudit 1 first
};

struct SymSearchResult {
  double value = 0;
  Vec phi;  // single-qudit state repeated on every site
};

// Lower bound on the maximum of <op> over product states. Deterministic for
// a fixed random stream; op must be Hermitian.
SepSearchResult maxsep(const Op& op, RandomSource& rng, int d = 2,
                       const SearchParams& par = {});

// Same search restricted to symmetric products phi x ... x phi.
SymSearchResult maxsymsep(const Op& op, RandomSource& rng, int d = 2,
                          const SearchParams& par = {});

// Maximum of <op> over pure states that factorize across the given
// bipartition of a qubit register. Mixed biseparable states cannot do
// better: expectation values are linear, so some pure member of any mixture
// matches it.
double maxbisep(const Op& op, const QuditList& mask, RandomSource& rng,
                const SearchParams& par = {});

// Maximum of maxbisep over every bipartition: a bound that only genuinely
// multipartite entangled states can exceed.
double maxb(const Op& op, RandomSource& rng, const SearchParams& par = {});

}  // namespace qreg
