#include "qreg/permute.hpp"

#include <algorithm>
#include <numeric>

#include "qreg/core.hpp"

namespace qreg {

void check_perm(const Perm& perm) {
  const int n = static_cast<int>(perm.size());
  if (n < 1) throw std::invalid_argument("permutation: empty");
  std::vector<bool> seen(n + 1, false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[p]) throw std::invalid_argument("permutation: not a bijection on 1..N");
    seen[p] = true;
  }
}

void check_qudit_list(const QuditList& list, int n) {
  std::vector<bool> seen(n + 1, false);
  for (int q : list) {
    if (q < 1 || q > n || seen[q]) throw std::invalid_argument("qudit list: index out of range or repeated");
    seen[q] = true;
  }
}

std::vector<Index> reordervec(const Perm& perm, int d) {
  check_perm(perm);
  const int n = static_cast<int>(perm.size());
  const Index dim = ipow(d, n);
  // output qudit q takes its digit from input qudit perm[n-q] (0-based list)
  std::vector<Index> out_stride(n + 1);
  {
    Index s = 1;
    for (int q = 1; q <= n; ++q, s *= d) out_stride[q] = s;
  }
  std::vector<Index> pi(dim);
  for (Index i = 0; i < dim; ++i) {
    Index o = 0;
    for (int q = 1; q <= n; ++q) o += static_cast<Index>(digit(i, perm[n - q], d)) * out_stride[q];
    pi[i] = o;
  }
  return pi;
}

Vec reorder(const Vec& v, const Perm& perm, int d) {
  if (static_cast<int>(perm.size()) != qsize(v, d))
    throw std::invalid_argument("reorder: permutation length does not match the register");
  std::vector<Index> pi = reordervec(perm, d);
  Vec out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(pi[i]) = v(i);
  return out;
}

Mat reorder(const Mat& m, const Perm& perm, int d) {
  if (static_cast<int>(perm.size()) != qsize(m, d))
    throw std::invalid_argument("reorder: permutation length does not match the register");
  std::vector<Index> pi = reordervec(perm, d);
  Mat out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(pi[i], pi[j]) = m(i, j);
  return out;
}

SpMat reorder(const SpMat& m, const Perm& perm, int d) {
  int n = log_base(m.rows(), d);
  if (n < 0 || m.rows() != m.cols()) throw std::invalid_argument("reorder: bad operator shape");
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("reorder: permutation length does not match the register");
  std::vector<Index> pi = reordervec(perm, d);
  std::vector<Eigen::Triplet<cxd>> trips;
  trips.reserve(m.nonZeros());
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      trips.emplace_back(pi[it.row()], pi[it.col()], it.value());
  SpMat out(m.rows(), m.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  return out;
}

Op reorder(const Op& m, const Perm& perm, int d) {
  if (m.is_sparse()) return Op(reorder(m.sparse(), perm, d));
  return Op(reorder(m.dense(), perm, d));
}

StateLike reorder(const StateLike& s, const Perm& perm, int d) {
  if (const Vec* v = std::get_if<Vec>(&s)) return reorder(*v, perm, d);
  return reorder(std::get<Mat>(s), perm, d);
}

Op reordermat(const Perm& perm, int d, Storage st) {
  std::vector<Index> pi = reordervec(perm, d);
  const Index dim = static_cast<Index>(pi.size());
  if (st == Storage::sparse) {
    std::vector<Eigen::Triplet<cxd>> trips;
    trips.reserve(dim);
    for (Index i = 0; i < dim; ++i) trips.emplace_back(pi[i], i, cxd(1, 0));
    SpMat p(dim, dim);
    p.setFromTriplets(trips.begin(), trips.end());
    return Op(std::move(p));
  }
  Mat p = Mat::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) p(pi[i], i) = 1;
  return Op(std::move(p));
}

Perm compose(const Perm& p2, const Perm& p1) {
  check_perm(p1);
  check_perm(p2);
  const int n = static_cast<int>(p1.size());
  if (static_cast<int>(p2.size()) != n) throw std::invalid_argument("compose: length mismatch");
  Perm out(n);
  for (int j = 0; j < n; ++j) out[j] = p1[n - p2[j]];
  return out;
}

namespace {

Perm shift_perm(int n, ShiftDir dir) {
  Perm p(n);
  if (dir == ShiftDir::left) {
    p[0] = 1;
    for (int j = 1; j < n; ++j) p[j] = n + 1 - j;
  } else {
    for (int j = 0; j + 1 < n; ++j) p[j] = n - 1 - j;
    p[n - 1] = n;
  }
  return p;
}

}  // namespace

Vec shift_qudits(const Vec& v, ShiftDir dir, int d) {
  return reorder(v, shift_perm(qsize(v, d), dir), d);
}

Mat shift_qudits(const Mat& m, ShiftDir dir, int d) {
  return reorder(m, shift_perm(qsize(m, d), dir), d);
}

StateLike shift_qudits(const StateLike& s, ShiftDir dir, int d) {
  if (const Vec* v = std::get_if<Vec>(&s)) return shift_qudits(*v, dir, d);
  return shift_qudits(std::get<Mat>(s), dir, d);
}

namespace {

Perm swap_perm(int n, int k, int l) {
  if (k == l || k < 1 || l < 1 || k > n || l > n)
    throw std::invalid_argument("swapqudits: indices must be distinct and in range");
  Perm p(n);
  for (int j = 0; j < n; ++j) p[j] = n - j;
  std::swap(p[n - k], p[n - l]);
  return p;
}

}  // namespace

Vec swapqudits(const Vec& v, int k, int l, int d) {
  return reorder(v, swap_perm(qsize(v, d), k, l), d);
}

Mat swapqudits(const Mat& m, int k, int l, int d) {
  return reorder(m, swap_perm(qsize(m, d), k, l), d);
}

StateLike swapqudits(const StateLike& s, int k, int l, int d) {
  if (const Vec* v = std::get_if<Vec>(&s)) return swapqudits(*v, k, l, d);
  return swapqudits(std::get<Mat>(s), k, l, d);
}

Mat keep(const StateLike& s, const QuditList& list, int d, bool normalize) {
  const int n = qsize(s, d);
  check_qudit_list(list, n);

  QuditList kept(list);
  std::sort(kept.begin(), kept.end());
  QuditList traced;
  for (int q = 1; q <= n; ++q)
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);

  const Index dim_keep = ipow(d, static_cast<int>(kept.size()));
  const Index dim_tr = ipow(d, static_cast<int>(traced.size()));

  // composite basis index from the sub-register configuration of the given qudits
  auto assemble = [&](const QuditList& qudits, Index conf) {
    Index idx = 0;
    for (size_t k = 0; k < qudits.size(); ++k) {
      idx += static_cast<Index>(conf % d) * ipow(d, qudits[k] - 1);
      conf /= d;
    }
    return idx;
  };

  std::vector<Index> base_keep(dim_keep), base_tr(dim_tr);
  for (Index a = 0; a < dim_keep; ++a) base_keep[a] = assemble(kept, a);
  for (Index t = 0; t < dim_tr; ++t) base_tr[t] = assemble(traced, t);

  Mat out = Mat::Zero(dim_keep, dim_keep);
  if (const Vec* vp = std::get_if<Vec>(&s)) {
    const Vec& v = *vp;
    for (Index a = 0; a < dim_keep; ++a)
      for (Index b = 0; b < dim_keep; ++b) {
        cxd acc = 0;
        for (Index t = 0; t < dim_tr; ++t)
          acc += v(base_keep[a] + base_tr[t]) * std::conj(v(base_keep[b] + base_tr[t]));
        out(a, b) = acc;
      }
  } else {
    const Mat& rho = std::get<Mat>(s);
    for (Index a = 0; a < dim_keep; ++a)
      for (Index b = 0; b < dim_keep; ++b) {
        cxd acc = 0;
        for (Index t = 0; t < dim_tr; ++t)
          acc += rho(base_keep[a] + base_tr[t], base_keep[b] + base_tr[t]);
        out(a, b) = acc;
      }
  }

  if (normalize) {
    cxd t = out.trace();
    if (std::abs(t) <= default_policy().norm_tol) throw std::invalid_argument("keep: zero trace");
    out /= t;
  }
  return out;
}

Mat remove(const StateLike& s, const QuditList& list, int d) {
  const int n = qsize(s, d);
  check_qudit_list(list, n);
  QuditList comp;
  for (int q = 1; q <= n; ++q)
    if (std::find(list.begin(), list.end(), q) == list.end()) comp.push_back(q);
  return keep(s, comp, d, true);
}

}  // namespace qreg
