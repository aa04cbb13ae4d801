#pragma once

#include "qreg/op.hpp"
#include "qreg/types.hpp"

namespace qreg {

// Permutation of qudit slots, written left-to-right in the same order as the
// printed ket string (qudit N first, qudit 1 last). Slot j of the output
// receives the original qudit perm[j]. Identity is (N, N-1, ..., 2, 1).
using Perm = std::vector<int>;

// 1-based qudit indices, no duplicates
using QuditList = std::vector<int>;

enum class ShiftDir { left, right };

void check_perm(const Perm& perm);
void check_qudit_list(const QuditList& list, int n);

// index map: basis vector i moves to basis vector pi[i]
std::vector<Index> reordervec(const Perm& perm, int d = 2);

Vec reorder(const Vec& v, const Perm& perm, int d = 2);
Mat reorder(const Mat& m, const Perm& perm, int d = 2);
SpMat reorder(const SpMat& m, const Perm& perm, int d = 2);
Op reorder(const Op& m, const Perm& perm, int d = 2);
StateLike reorder(const StateLike& s, const Perm& perm, int d = 2);

// permutation matrix P with P*v = reorder(v, perm)
Op reordermat(const Perm& perm, int d = 2, Storage st = Storage::dense);

// perm list realizing "apply p1 first, then p2"
Perm compose(const Perm& p2, const Perm& p1);

// cyclic shift; left then right is the identity
StateLike shift_qudits(const StateLike& s, ShiftDir dir, int d = 2);
Vec shift_qudits(const Vec& v, ShiftDir dir, int d = 2);
Mat shift_qudits(const Mat& m, ShiftDir dir, int d = 2);

StateLike swapqudits(const StateLike& s, int k, int l, int d = 2);
Vec swapqudits(const Vec& v, int k, int l, int d = 2);
Mat swapqudits(const Mat& m, int k, int l, int d = 2);

// partial trace keeping the listed qudits (relative order preserved);
// empty list yields the 1x1 trace
Mat keep(const StateLike& s, const QuditList& list, int d = 2, bool normalize = true);
Mat remove(const StateLike& s, const QuditList& list, int d = 2);

}  // namespace qreg
