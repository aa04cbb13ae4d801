#include "qreg/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qreg/chains.hpp"
#include "qreg/core.hpp"
#include "qreg/states.hpp"

namespace qreg {

namespace {

// density matrix of s, optionally trace-normalized
Mat state_matrix(const StateLike& s, bool normalize) {
  if (const Vec* v = std::get_if<Vec>(&s)) {
    Mat rho = (*v) * v->adjoint();
    return normalize ? nm(rho) : rho;
  }
  const Mat& m = std::get<Mat>(s);
  if (m.rows() != m.cols()) throw std::invalid_argument("state: matrix is not square");
  return normalize ? nm(m) : m;
}

Index square_root_side(Index side, const char* who) {
  const Index half = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(side))));
  if (half < 1 || half * half != side)
    throw std::invalid_argument(std::string(who) + ": side does not split into equal halves");
  return half;
}

void check_params(const SearchParams& par) {
  if (par.n_phase1 < 1 || par.n_phase2 < 0 || !(par.step_const > 0))
    throw std::invalid_argument("search: invalid parameters");
}

void check_search_op(const Op& op, const char* who) {
  if (!is_hermitian(op, default_policy().herm_tol))
    throw std::invalid_argument(std::string(who) + ": operator must be Hermitian");
}

Vec sphere_point(Index dim, RandomSource& rng) {
  Vec v(dim);
  while (true) {
    for (Index i = 0; i < dim; ++i) v(i) = cxd(rng.normal(), rng.normal());
    const double nrm = v.norm();
    if (nrm > 0) return v / nrm;
  }
}

Vec perturbed(const Vec& v, double step, RandomSource& rng) {
  Vec w = v;
  for (Index i = 0; i < w.size(); ++i) w(i) += step * cxd(rng.normal(), rng.normal());
  const double nrm = w.norm();
  if (nrm > 0) return w / nrm;
  return v;
}

// <full|op|full> for the product of per-qudit factors (qudit 1 first)
double product_ex(const Op& op, const std::vector<Vec>& factors) {
  std::vector<Vec> order(factors.rbegin(), factors.rend());
  const Vec full = mkron(order);
  return std::real(braket(full, op, full));
}

int register_size(const Op& op, int d, const char* who) {
  const int n = log_base(op.side(), d);
  if (n < 1)
    throw std::invalid_argument(std::string(who) + ": operator side is not a power of the local dimension");
  return n;
}

}  // namespace

Mat pt(const StateLike& s, const QuditList& list, int d, bool normalize) {
  if (d < 2) throw std::invalid_argument("pt: local dimension must be at least 2");
  Mat rho = state_matrix(s, normalize);
  const int n = qsize(rho, d);
  check_qudit_list(list, n);
  std::vector<bool> flip(n, false);
  for (int q : list) flip[q - 1] = true;

  std::vector<Index> weight(n);
  Index cur = 1;
  for (int q = 0; q < n; ++q) { weight[q] = cur; cur *= d; }

  const Index dim = rho.rows();
  Mat out(dim, dim);
  for (Index c = 0; c < dim; ++c) {
    for (Index r = 0; r < dim; ++r) {
      Index rr = r, cc = c, ro = 0, co = 0;
      for (int q = 0; q < n; ++q) {
        int a = static_cast<int>(rr % d); rr /= d;
        int b = static_cast<int>(cc % d); cc /= d;
        if (flip[q]) std::swap(a, b);
        ro += a * weight[q];
        co += b * weight[q];
      }
      out(ro, co) = rho(r, c);
    }
  }
  return out;
}

double negativity(const StateLike& s, const QuditList& list, int d) {
  const Mat t = pt(s, list, d);
  if (!is_hermitian(Op(t), default_policy().herm_tol))
    throw std::invalid_argument("negativity: state is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(t, Eigen::EigenvaluesOnly);
  double total = 0;
  for (Index i = 0; i < es.eigenvalues().size(); ++i) {
    const double lam = es.eigenvalues()(i);
    if (lam < 0) total -= lam;
  }
  return total;
}

Mat realign(const Op& m) {
  const Mat md = m.make_dense();
  if (md.rows() != md.cols()) throw std::invalid_argument("realign: matrix is not square");
  const Index half = square_root_side(md.rows(), "realign");
  Mat out(half * half, half * half);
  for (Index j = 0; j < half; ++j)
    for (Index j2 = 0; j2 < half; ++j2)
      for (Index i = 0; i < half; ++i)
        for (Index i2 = 0; i2 < half; ++i2)
          out(i * half + i2, j * half + j2) = md(i * half + j, i2 * half + j2);
  return out;
}

Mat mrealign(const Op& m, const Perm& iperm, int d) {
  const Mat md = m.make_dense();
  if (md.rows() != md.cols()) throw std::invalid_argument("mrealign: matrix is not square");
  const int n = qsize(md, d);
  if (static_cast<int>(iperm.size()) != 2 * n)
    throw std::invalid_argument("mrealign: permutation must list both index blocks");
  // column-major flattening makes entry (r, c) the tensor element whose low
  // n qudits come from r and whose high n qudits come from c
  const Vec flat = Eigen::Map<const Vec>(md.data(), md.size());
  const Vec moved = reorder(flat, iperm, d);
  return Eigen::Map<const Mat>(moved.data(), md.rows(), md.cols());
}

double ccnr(const StateLike& s) {
  const Mat rho = state_matrix(s, true);
  square_root_side(rho.rows(), "ccnr");
  return trnorm(Op(realign(Op(rho))));
}

double concurrence(const StateLike& rho) {
  const Mat r = state_matrix(rho, true);
  if (r.rows() != 4 || r.cols() != 4)
    throw std::invalid_argument("concurrence: a two-qubit state is required");
  if (!is_hermitian(Op(r), default_policy().herm_tol))
    throw std::invalid_argument("concurrence: state is not Hermitian");
  Mat yy = Mat::Zero(4, 4);
  yy(0, 3) = -1; yy(1, 2) = 1; yy(2, 1) = 1; yy(3, 0) = -1;
  const Mat flipped = yy * r.conjugate() * yy;
  Eigen::ComplexEigenSolver<Mat> es(r * flipped, false);
  std::array<double, 4> lam{};
  for (int i = 0; i < 4; ++i)
    lam[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(lam.begin(), lam.end(), std::greater<double>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

Eigen::VectorXd schmidt(const Vec& v, const QuditList& mask) {
  const int n = qsize(v, 2);
  check_qudit_list(mask, n);
  if (mask.empty() || static_cast<int>(mask.size()) == n)
    throw std::invalid_argument("schmidt: mask must be a proper nonempty bipartition");
  const Vec vn = nm(v);
  std::vector<bool> inmask(n, false);
  for (int q : mask) inmask[q - 1] = true;
  const int na = static_cast<int>(mask.size());
  Mat block(Index(1) << na, Index(1) << (n - na));
  for (Index i = 0; i < vn.size(); ++i) {
    Index ra = 0, cb = 0;
    int pa = 0, pb = 0;
    for (int q = 0; q < n; ++q) {
      const Index bit = (i >> q) & 1;
      if (inmask[q]) ra |= bit << pa++;
      else cb |= bit << pb++;
    }
    block(ra, cb) = vn(i);
  }
  Eigen::JacobiSVD<Mat> svd(block);
  return svd.singularValues();
}

double overlapb(const Vec& v) {
  const int n = qsize(v, 2);
  if (n < 2) throw std::invalid_argument("overlapb: at least two qubits required");
  // every bipartition once: enumerate the blocks containing qubit 1
  double best = 0;
  const Index patterns = Index(1) << (n - 1);
  for (Index bits = 0; bits + 1 < patterns; ++bits) {
    QuditList mask{1};
    for (int q = 2; q <= n; ++q)
      if ((bits >> (q - 2)) & 1) mask.push_back(q);
    const double top = schmidt(v, mask)(0);
    best = std::max(best, top * top);
  }
  return best;
}

SpinSqueezingReport optspinsq(const StateLike& rho) {
  const Mat r = state_matrix(rho, true);
  const int n = qsize(r, 2);
  if (n < 2) throw std::invalid_argument("optspinsq: at least two qubits required");
  const PauliBasis pb = pauli_basis();
  const std::array<Mat, 3> j = {
      (0.5 * coll(Op(pb.x), n)).make_dense(),
      (0.5 * coll(Op(pb.y), n)).make_dense(),
      (0.5 * coll(Op(pb.z), n)).make_dense(),
  };

  Eigen::Vector3d first;
  Eigen::Matrix3d smat;
  for (int k = 0; k < 3; ++k) {
    first(k) = std::real((r * j[k]).trace());
    for (int l = k; l < 3; ++l) {
      const double sym = 0.5 * std::real((r * (j[k] * j[l] + j[l] * j[k])).trace());
      smat(k, l) = sym;
      smat(l, k) = sym;
    }
  }

  // rotate to the eigenframe of the covariance matrix; variances become the
  // eigenvalues and second moments pick up the rotated first moments
  const Eigen::Matrix3d cov = smat - first * first.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(cov);
  const Eigen::Vector3d var = es.eigenvalues();
  const Eigen::Vector3d mrot = es.eigenvectors().transpose() * first;
  Eigen::Vector3d second;
  for (int k = 0; k < 3; ++k) second(k) = var(k) + mrot(k) * mrot(k);

  const double nn = n;
  const double half = 0.5 * nn;
  SpinSqueezingReport rep;
  rep.f123[0] = var.sum() - half;
  double f2 = std::numeric_limits<double>::infinity();
  double f3 = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    f2 = std::min(f2, (nn - 1) * var(a) - second(b) - second(c) + half);
    f3 = std::min(f3, (nn - 1) * (var(b) + var(c)) - second(a) - 0.25 * nn * (nn - 2));
  }
  rep.f123[1] = f2;
  rep.f123[2] = f3;
  rep.fmin = std::min({rep.f123[0], f2, f3});
  return rep;
}

SepSearchResult maxsep(const Op& op, RandomSource& rng, int d,
                       const SearchParams& par) {
  check_params(par);
  check_search_op(op, "maxsep");
  if (d < 2) throw std::invalid_argument("maxsep: local dimension must be at least 2");
  const int n = register_size(op, d, "maxsep");

  SepSearchResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < par.n_phase1; ++t) {
    std::vector<Vec> cand(n);
    for (int q = 0; q < n; ++q) cand[q] = sphere_point(d, rng);
    const double val = product_ex(op, cand);
    if (val > best.value) { best.value = val; best.factors = std::move(cand); }
  }
  for (int t = 0; t < par.n_phase2; ++t) {
    std::vector<Vec> cand(n);
    for (int q = 0; q < n; ++q) cand[q] = perturbed(best.factors[q], par.step_const, rng);
    const double val = product_ex(op, cand);
    if (val > best.value) { best.value = val; best.factors = std::move(cand); }
  }
  return best;
}

SymSearchResult maxsymsep(const Op& op, RandomSource& rng, int d,
                          const SearchParams& par) {
  check_params(par);
  check_search_op(op, "maxsymsep");
  if (d < 2) throw std::invalid_argument("maxsymsep: local dimension must be at least 2");
  const int n = register_size(op, d, "maxsymsep");

  SymSearchResult best;
  best.value = -std::numeric_limits<double>::infinity();
  auto value = [&](const Vec& phi) {
    const Vec full = pkron(phi, n);
    return std::real(braket(full, op, full));
  };
  for (int t = 0; t < par.n_phase1; ++t) {
    const Vec cand = sphere_point(d, rng);
    const double val = value(cand);
    if (val > best.value) { best.value = val; best.phi = cand; }
  }
  for (int t = 0; t < par.n_phase2; ++t) {
    const Vec cand = perturbed(best.phi, par.step_const, rng);
    const double val = value(cand);
    if (val > best.value) { best.value = val; best.phi = cand; }
  }
  return best;
}

double maxbisep(const Op& op, const QuditList& mask, RandomSource& rng,
                const SearchParams& par) {
  check_params(par);
  check_search_op(op, "maxbisep");
  const int n = log_base(op.side(), 2);
  if (n < 2) throw std::invalid_argument("maxbisep: at least two qubits required");
  check_qudit_list(mask, n);
  if (mask.empty() || static_cast<int>(mask.size()) == n)
    throw std::invalid_argument("maxbisep: mask must be a proper nonempty bipartition");

  // use the block containing qubit 1, so a mask and its complement run the
  // identical search
  std::vector<bool> inmask(n, false);
  for (int q : mask) inmask[q - 1] = true;
  if (!inmask[0]) inmask.flip();
  int na = 0;
  for (int q = 0; q < n; ++q) na += inmask[q] ? 1 : 0;

  const Index dim = Index(1) << n;
  std::vector<Index> ia(dim), ib(dim);
  for (Index i = 0; i < dim; ++i) {
    Index ra = 0, cb = 0;
    int pa = 0, pb = 0;
    for (int q = 0; q < n; ++q) {
      const Index bit = (i >> q) & 1;
      if (inmask[q]) ra |= bit << pa++;
      else cb |= bit << pb++;
    }
    ia[i] = ra;
    ib[i] = cb;
  }

  const Index da = Index(1) << na;
  const Index db = Index(1) << (n - na);
  Vec full(dim);
  auto value = [&](const Vec& a, const Vec& b) {
    for (Index i = 0; i < dim; ++i) full(i) = a(ia[i]) * b(ib[i]);
    return std::real(braket(full, op, full));
  };

  double best_val = -std::numeric_limits<double>::infinity();
  Vec best_a, best_b;
  for (int t = 0; t < par.n_phase1; ++t) {
    const Vec a = sphere_point(da, rng);
    const Vec b = sphere_point(db, rng);
    const double val = value(a, b);
    if (val > best_val) { best_val = val; best_a = a; best_b = b; }
  }
  for (int t = 0; t < par.n_phase2; ++t) {
    const Vec a = perturbed(best_a, par.step_const, rng);
    const Vec b = perturbed(best_b, par.step_const, rng);
    const double val = value(a, b);
    if (val > best_val) { best_val = val; best_a = a; best_b = b; }
  }
  return best_val;
}

double maxb(const Op& op, RandomSource& rng, const SearchParams& par) {
  check_params(par);
  check_search_op(op, "maxb");
  const int n = log_base(op.side(), 2);
  if (n < 2) throw std::invalid_argument("maxb: at least two qubits required");
  double best = -std::numeric_limits<double>::infinity();
  const Index patterns = Index(1) << (n - 1);
  for (Index bits = 0; bits + 1 < patterns; ++bits) {
    QuditList mask{1};
    for (int q = 2; q <= n; ++q)
      if ((bits >> (q - 2)) & 1) mask.push_back(q);
    best = std::max(best, maxbisep(op, mask, rng, par));
  }
  return best;
}

}  // namespace qreg
