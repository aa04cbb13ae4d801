#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "oracles.hpp"
#include "qreg/chains.hpp"
#include "qreg/core.hpp"
#include "qreg/pauli.hpp"
#include "qreg/permute.hpp"
#include "qreg/states.hpp"

using namespace qreg;

namespace {

const PauliBasis& pb() {
  static PauliBasis p = pauli_basis();
  return p;
}

Op ox() { return Op(pb().x); }
Op oy() { return Op(pb().y); }
Op oz() { return Op(pb().z); }

// exact finite-chain ground energy per site from the antiperiodic momentum sum
double fermion_e0(double b, int n) {
  double s = 0.0;
  for (int m = 0; m < n; ++m) {
    double k = (2 * m + 1) * std::numbers::pi / n;
    s += std::sqrt(1.0 + b * b - 2.0 * b * std::cos(k));
  }
  return -s / n;
}

// single-site embedding by direct factor lists, independent of the builders
Mat embed1(const Mat& op, int k, int n) {
  std::vector<Mat> f;
  for (int q = n; q >= 1; --q) f.push_back(q == k ? op : Mat(Mat::Identity(2, 2)));
  return mkron(f);
}

Mat mk(const std::vector<Mat>& f) { return mkron(f); }

int plus_terms(const std::string& s) {
  return 1 + static_cast<int>(std::count(s.begin(), s.end(), '+'));
}

Eigen::VectorXd eigs_of(const Op& m) {
  Eigen::SelfAdjointEigenSolver<Mat> es(m.make_dense());
  return es.eigenvalues();
}

// independent dense thermal energy per site for the periodic chain
double thermal_oracle(double b, double t, int n) {
  Mat h = Mat::Zero(Index(1) << n, Index(1) << n);
  for (int k = 1; k < n; ++k) h -= embed1(pb().z, k, n) * embed1(pb().z, k + 1, n);
  h -= embed1(pb().z, n, n) * embed1(pb().z, 1, n);
  for (int k = 1; k <= n; ++k) h += b * embed1(pb().x, k, n);
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Eigen::VectorXd lam = es.eigenvalues();
  double num = 0.0, den = 0.0;
  for (Index i = 0; i < lam.size(); ++i) {
    double w = std::exp(-(lam(i) - lam(0)) / t);
    num += lam(i) * w;
    den += w;
  }
  return num / den / n;
}

}  // namespace

TEST_CASE("quditop places single-site operators") {
  CHECK(max_abs_diff(quditop(oz(), 1, 2), Op(mk({pb().e, pb().z}))) == 0.0);
  CHECK(max_abs_diff(quditop(oz(), 2, 2), Op(mk({pb().z, pb().e}))) == 0.0);

  oracle::TestRng rng(401);
  Mat h = rng.herm(2);
  CHECK(max_abs_diff(quditop(Op(h), 2, 3), Op(embed1(h, 2, 3))) == 0.0);

  // spectrum of the embedding repeats each local eigenvalue 2^(n-1) times
  Eigen::SelfAdjointEigenSolver<Mat> loc(h);
  Eigen::VectorXd big = eigs_of(quditop(Op(h), 2, 3));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(big(i) - loc.eigenvalues()(0)) < 1e-12);
    CHECK(std::abs(big(4 + i) - loc.eigenvalues()(1)) < 1e-12);
  }

  // qutrit placement
  Mat q3 = rng.herm(3);
  Mat expected = kron2(Mat(Mat::Identity(3, 3)), q3);
  CHECK(max_abs_diff(quditop(Op(q3), 1, 2), Op(expected)) == 0.0);

  // storage rules: sparse in, sparse out; explicit request wins
  Op zs = to_sparse(oz());
  CHECK(quditop(zs, 1, 3).is_sparse());
  CHECK_FALSE(quditop(zs, 1, 3, Storage::dense).is_sparse());
  CHECK(quditop(oz(), 1, 3, Storage::sparse).is_sparse());
  CHECK(max_abs_diff(quditop(zs, 2, 3), quditop(oz(), 2, 3)) == 0.0);

  // a 2^14 register stays cheap in sparse form
  Op big14 = quditop(zs, 3, 14);
  CHECK(big14.side() == 16384);
  const SpMat& sm = big14.sparse();
  CHECK(sm.coeff(0, 0) == cxd(1, 0));
  CHECK(sm.coeff(4, 4) == cxd(-1, 0));

  CHECK_THROWS_AS(quditop(oz(), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(quditop(oz(), 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(quditop(oz(), 1, 20, Storage::dense), std::invalid_argument);
}

TEST_CASE("twoquditop embeds two-qudit gates") {
  StandardGates g = standard_gates();
  CHECK(max_abs_diff(twoquditop(Op(g.u_cnot), 1, 2, 2), Op(g.u_cnot)) == 0.0);

  // swap gate moves |01> to |10>
  Op swap = reordermat({1, 2}, 2);
  Vec v01 = Vec::Zero(4);
  v01(1) = 1.0;
  Vec out = twoquditop(swap, 1, 2, 2).apply(v01);
  CHECK(std::abs(out(2) - 1.0) < 1e-15);
  CHECK(std::abs(out.norm() - 1.0) < 1e-15);

  CHECK(max_abs_diff(twoquditop(Op(mk({pb().z, pb().z})), 1, 2, 3),
                     interact(oz(), oz(), 1, 2, 3)) == 0.0);

  // product operators route their factors to the requested sites
  oracle::TestRng rng(402);
  Mat a = rng.herm(2), b = rng.herm(2);
  Op ab{kron2(a, b)};  // high factor a on slot 2, low factor b on slot 1
  for (auto [k1, k2] : {std::pair{1, 3}, {3, 1}, {2, 4}, {4, 2}, {1, 2}}) {
    CHECK(max_abs_diff(twoquditop(ab, k1, k2, 4), interact(Op(b), Op(a), k1, k2, 4)) == 0.0);
  }

  // embedded cnot: control on qudit 1, target on qudit 3
  Op emb = twoquditop(Op(g.u_cnot), 3, 1, 3);
  for (int i = 0; i < 8; ++i) {
    Vec e = Vec::Zero(8);
    e(i) = 1.0;
    int j = (i & 1) ? (i ^ 4) : i;
    Vec w = emb.apply(e);
    CHECK(std::abs(w(j) - 1.0) < 1e-15);
  }

  // qutrit pair, swapped placement
  Mat a3 = rng.herm(3), b3 = rng.herm(3);
  CHECK(max_abs_diff(twoquditop(Op(kron2(a3, b3)), 2, 1, 2), Op(kron2(b3, a3))) == 0.0);

  CHECK(twoquditop(Op(SpMat(g.u_cnot.sparseView())), 1, 3, 3).is_sparse());
  CHECK(max_abs_diff(twoquditop(Op(SpMat(g.u_cnot.sparseView())), 1, 3, 3),
                     twoquditop(Op(g.u_cnot), 1, 3, 3)) == 0.0);

  CHECK_THROWS_AS(twoquditop(Op(g.u_cnot), 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(twoquditop(Op(Mat(Mat::Identity(3, 3))), 1, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(twoquditop(Op(g.u_cnot), 1, 3, 2), std::invalid_argument);
}

TEST_CASE("interact multiplies embedded factors") {
  oracle::TestRng rng(403);
  Mat a = rng.herm(2), b = rng.herm(2);
  CHECK(max_abs_diff(interact(Op(a), Op(b), 2, 4, 4),
                     quditop(Op(a), 2, 4) * quditop(Op(b), 4, 4)) == 0.0);
  CHECK(max_abs_diff(interact(Op(a), Op(b), 1, 3, 3), interact(Op(b), Op(a), 3, 1, 3)) == 0.0);

  Mat a3 = rng.herm(3), b3 = rng.herm(3);
  std::vector<Mat> f = {Mat(Mat::Identity(3, 3)), a3, b3};
  CHECK(max_abs_diff(interact(Op(a3), Op(b3), 2, 1, 3), Op(mkron(f))) == 0.0);

  CHECK(interact(to_sparse(Op(a)), Op(b), 1, 2, 2).is_sparse());

  CHECK_THROWS_AS(interact(Op(a), Op(b), 2, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(interact(Op(a), Op(b3), 1, 2, 2), std::invalid_argument);
}

TEST_CASE("coll sums site terms") {
  Mat two = coll(oz(), 2).make_dense();
  Mat expect = Mat::Zero(4, 4);
  expect(0, 0) = 2.0;
  expect(3, 3) = -2.0;
  CHECK(max_abs_diff(Op(two), Op(expect)) == 0.0);

  Mat x3 = embed1(pb().x, 1, 3) + embed1(pb().x, 2, 3) + embed1(pb().x, 3, 3);
  CHECK(max_abs_diff(coll(ox(), 3), Op(x3)) == 0.0);

  // half filling sits in the zero eigenspace of the collective z
  Vec d24 = dstate(2, 4);
  CHECK(coll(oz(), 4).apply(d24).norm() == 0.0);

  // total spin on four spin-half sites tops out at j(j+1) = 6
  Op jx = 0.5 * coll(ox(), 4), jy = 0.5 * coll(oy(), 4), jz = 0.5 * coll(oz(), 4);
  Op j2 = jx * jx + jy * jy + jz * jz;
  CHECK(std::abs(maxeig(j2) - 6.0) < 1e-9);

  Mat q3 = Mat::Zero(3, 3);
  q3(0, 0) = 1.0;
  q3(2, 2) = -1.0;
  Mat pair = kron2(q3, Mat(Mat::Identity(3, 3))) + kron2(Mat(Mat::Identity(3, 3)), q3);
  CHECK(max_abs_diff(coll(Op(q3), 2), Op(pair)) == 0.0);

  CHECK(coll(to_sparse(ox()), 3).is_sparse());
  CHECK_THROWS_AS(coll(ox(), 0), std::invalid_argument);
}

TEST_CASE("nnchain builds bond sums") {
  CHECK(max_abs_diff(nnchain(oz(), oz(), 2), Op(mk({pb().z, pb().z}))) == 0.0);
  CHECK(max_abs_diff(nnchain(oz(), ox(), 2), Op(mk({pb().x, pb().z}))) == 0.0);
  CHECK(max_abs_diff(nnchain(oz(), oz(), 2, Boundary::periodic),
                     Op(Mat(2.0 * mk({pb().z, pb().z})))) == 0.0);

  CHECK(decompose(nnchain(oz(), oz(), 3, Boundary::periodic)) == "1zz+z1z+zz1");
  CHECK(decompose(nnchain(oz(), oz(), 4)) == "11zz+1zz1+zz11");
  CHECK(decompose(nnchain(oz(), oz(), 4, Boundary::periodic)) == "11zz+1zz1+z11z+zz11");

  // term counts: n-1 bonds open, one more closed
  for (int n : {3, 5, 6}) {
    CHECK(plus_terms(decompose(nnchain(oz(), oz(), n))) == n - 1);
    CHECK(plus_terms(decompose(nnchain(oz(), oz(), n, Boundary::periodic))) == n);
  }

  CHECK(is_hermitian(nnchain(ox(), ox(), 5, Boundary::periodic), 1e-12));
  CHECK(max_abs_diff(nnchain(ox(), oy(), 6, Boundary::periodic, Storage::sparse),
                     nnchain(ox(), oy(), 6, Boundary::periodic, Storage::dense)) == 0.0);
  CHECK_THROWS_AS(nnchain(oz(), oz(), 1), std::invalid_argument);
}

TEST_CASE("ising and friends match their definitions") {
  Mat i2 = ising(0.0, 2).make_dense();
  Mat want = Mat::Zero(4, 4);
  want(0, 0) = -1.0;
  want(1, 1) = 1.0;
  want(2, 2) = 1.0;
  want(3, 3) = -1.0;
  CHECK(max_abs_diff(Op(i2), Op(want)) == 0.0);

  Mat direct = -mk({pb().z, pb().z}) + 0.75 * (mk({pb().x, pb().e}) + mk({pb().e, pb().x}));
  CHECK(max_abs_diff(ising(0.75, 2), Op(direct)) < 1e-15);

  // no field: every aligned bond contributes -1
  CHECK(std::abs(mineig(ising(0.0, 5)) / 5 - (-0.8)) < 1e-12);

  CHECK(is_hermitian(ising(1.3, 6, Boundary::periodic), 1e-12));
  CHECK_FALSE(ising(1.0, 8).is_sparse());
  CHECK(ising(1.0, 14).is_sparse());
  CHECK(max_abs_diff(ising(0.7, 6, Boundary::periodic, Storage::sparse),
                     ising(0.7, 6, Boundary::periodic, Storage::dense)) == 0.0);

  Mat hh = heisenberg(2).make_dense();
  Mat hwant(4, 4);
  hwant << 1, 0, 0, 0, 0, -1, 2, 0, 0, 2, -1, 0, 0, 0, 0, 1;
  CHECK(max_abs_diff(Op(hh), Op(hwant)) == 0.0);
  CHECK(decompose(heisenberg(2)) == "xx+yy+zz");
  CHECK(max_abs_diff(heisenberg(2), paulistr("xx+yy+zz")) == 0.0);

  // full SU(2) symmetry: commutes with every collective spin component
  CHECK(max_abs_diff(comm(heisenberg(4), coll(oz(), 4)), Op(Mat(Mat::Zero(16, 16)))) < 1e-12);
  CHECK(max_abs_diff(comm(heisenberg(4), coll(ox(), 4)), Op(Mat(Mat::Zero(16, 16)))) < 1e-12);

  XYParams p{2.5, -1.0, 0.3};
  Mat xy = xy_hamiltonian(p, 3).make_dense();
  Mat ref = Mat::Zero(8, 8);
  for (int k = 1; k < 3; ++k) {
    ref += 2.5 * embed1(pb().x, k, 3) * embed1(pb().x, k + 1, 3);
    ref += -1.0 * embed1(pb().y, k, 3) * embed1(pb().y, k + 1, 3);
  }
  for (int k = 1; k <= 3; ++k) ref += 0.3 * embed1(pb().x, k, 3);
  CHECK(max_abs_diff(Op(xy), Op(ref)) < 1e-14);

  CHECK(max_abs_diff(xy_hamiltonian({0.0, 0.0, 1.0}, 2), coll(ox(), 2)) == 0.0);
  CHECK(max_abs_diff(xy_hamiltonian({1.0, 1.0, 0.0}, 4, Boundary::periodic),
                     heisenberg(4, Boundary::periodic) -
                         nnchain(oz(), oz(), 4, Boundary::periodic)) < 1e-14);

  CHECK_THROWS_AS(ising(1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(heisenberg(0), std::invalid_argument);
}

TEST_CASE("lattice2d couples rectangular grids") {
  // 2x2 open lattice: two horizontal and two vertical bonds
  Op a22 = lattice2d(oz(), oz(), 2, 2);
  CHECK(a22.is_sparse());
  Op ref = interact(oz(), oz(), 1, 2, 4) + interact(oz(), oz(), 3, 4, 4) +
           interact(oz(), oz(), 1, 3, 4) + interact(oz(), oz(), 2, 4, 4);
  CHECK(max_abs_diff(a22, ref) == 0.0);
  CHECK(plus_terms(decompose(a22)) == 4);

  // wrapping a two-site direction doubles every coupling
  Op p22 = lattice2d(oz(), oz(), 2, 2, Boundary::periodic);
  CHECK(max_abs_diff(p22, 2.0 * a22) == 0.0);

  CHECK(plus_terms(decompose(lattice2d(oz(), oz(), 3, 2))) == 7);

  // ordered pairs: op1 sits on the lower-numbered end of each bond
  Op mixed = lattice2d(oz(), ox(), 2, 2);
  Op mref = interact(oz(), ox(), 1, 2, 4) + interact(oz(), ox(), 3, 4, 4) +
            interact(oz(), ox(), 1, 3, 4) + interact(oz(), ox(), 2, 4, 4);
  CHECK(max_abs_diff(mixed, mref) == 0.0);

  // single row degenerates to the open or closed chain
  CHECK(max_abs_diff(lattice2d(oz(), oz(), 4, 1), nnchain(oz(), oz(), 4)) == 0.0);
  CHECK(max_abs_diff(lattice2d(oz(), oz(), 4, 1, Boundary::periodic),
                     nnchain(oz(), oz(), 4, Boundary::periodic)) == 0.0);

  CHECK(max_abs_diff(lattice2d(ox(), ox(), 3, 2, Boundary::periodic, Storage::dense),
                     lattice2d(ox(), ox(), 3, 2, Boundary::periodic)) == 0.0);

  CHECK_THROWS_AS(lattice2d(oz(), oz(), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(lattice2d(oz(), oz(), 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(lattice2d(oz(), Op(Mat(Mat::Identity(3, 3))), 2, 2), std::invalid_argument);
}

TEST_CASE("ising2d ties the field to the lattice") {
  Op h = ising2d(0.3, 2, 2);
  CHECK(h.is_sparse());
  Op ref = -lattice2d(oz(), oz(), 2, 2) + 0.3 * coll(ox(), 4, Storage::sparse);
  CHECK(max_abs_diff(h, ref) == 0.0);

  // zero field: fully aligned ground state, one unit per bond
  CHECK(std::abs(mineig(to_dense(ising2d(0.0, 2, 2))) - (-4.0)) < 1e-12);

  CHECK(max_abs_diff(ising2d(0.7, 4, 1), ising(0.7, 4)) == 0.0);

  Op big = ising2d(1.0, 4, 3, Boundary::periodic);
  CHECK(big.side() == 4096);
  CHECK(big.is_sparse());
  CHECK(is_hermitian(big, 1e-12));
}

TEST_CASE("chain ground energy, finite and thermodynamic") {
  CHECK(std::abs(ising_ground(0.0) - (-1.0)) < 1e-12);
  CHECK(std::abs(ising_ground(1.0) - (-4.0 / std::numbers::pi)) < 1e-9);
  CHECK(std::abs(ising_ground(0.5) - (-1.063544409973365)) < 1e-9);
  CHECK(std::abs(ising_ground(2.0) - (-2.127088819946730)) < 1e-9);

  // duality and field-sign symmetry of the dispersion
  CHECK(std::abs(ising_ground(2.0) - 2.0 * ising_ground(0.5)) < 1e-10);
  CHECK(std::abs(ising_ground(-1.0) - ising_ground(1.0)) < 1e-10);

  for (double b : {0.5, 1.0, 2.0})
    for (int n : {4, 6, 8}) CHECK(std::abs(ising_ground(b, n) - fermion_e0(b, n)) < 1e-8);
  CHECK(std::abs(ising_ground(0.5, 2) - (-1.118033988749895)) < 1e-9);

  // long chain goes through the sparse eigensolver
  double e14 = ising_ground(1.0, 14);
  CHECK(std::abs(e14 - (-1.275914895768644)) < 1e-7);
  CHECK(std::abs(e14 - ising_ground(1.0)) < 5e-3);

  CHECK_THROWS_AS(ising_ground(1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(ising_ground(1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(ising_ground(1.0, -2), std::invalid_argument);
}

TEST_CASE("chain thermal energies") {
  CHECK(std::abs(ising_thermal(1.0, 1.0) - (-1.117941837340175)) < 1e-9);
  CHECK(std::abs(ising_thermal(2.0, 0.5) - (-2.120512998597256)) < 1e-9);
  CHECK(std::abs(ising_thermal(0.5, 2.0) - (-0.552385176859559)) < 1e-9);
  CHECK(std::abs(ising_free(1.0, 1.0) - (-1.415207639846262)) < 1e-9);
  CHECK(std::abs(ising_free(0.5, 2.0) - (-1.679628143397758)) < 1e-9);

  // cold limit recovers the ground energy on both routes
  CHECK(std::abs(ising_thermal(1.0, 1e-3) - ising_ground(1.0)) < 1e-6);
  CHECK(std::abs(ising_free(1.0, 1e-3) - ising_ground(1.0)) < 1e-6);

  // hot limit decays like (1 + b^2)/t, not faster
  CHECK(std::abs(ising_thermal(0.5, 100.0) - (-0.012499312551038)) < 1e-9);
  CHECK(std::abs(ising_thermal(0.5, 100.0)) < 2e-2);
  CHECK(std::abs(ising_thermal(1.0, 100.0) - (-0.02)) < 1e-4);

  const std::vector<double> ts = {0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0};
  for (double b : {0.5, 1.0, 2.0}) {
    for (std::size_t i = 1; i < ts.size(); ++i) {
      CHECK(ising_thermal(b, ts[i]) >= ising_thermal(b, ts[i - 1]) - 1e-12);
      CHECK(ising_free(b, ts[i]) <= ising_free(b, ts[i - 1]) + 1e-12);
    }
    for (double t : ts) CHECK(ising_free(b, t) <= ising_thermal(b, t) + 1e-12);
  }

  CHECK(std::abs(ising_thermal(1.0, 1.0, 8) - thermal_oracle(1.0, 1.0, 8)) < 1e-10);
  CHECK(std::abs(ising_thermal(0.5, 2.0, 6) - thermal_oracle(0.5, 2.0, 6)) < 1e-10);
  CHECK(std::abs(ising_thermal(2.0, 0.5, 4) - thermal_oracle(2.0, 0.5, 4)) < 1e-10);
  CHECK(std::abs(ising_thermal(1.0, 1e6, 4)) < 1e-5);

  CHECK_THROWS_AS(ising_thermal(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ising_thermal(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(ising_free(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ising_thermal(1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("classical product-state energies") {
  CHECK(std::abs(ising_classical_ground(0.0) - (-1.0)) < 1e-9);
  CHECK(std::abs(ising_classical_ground(0.5) - (-1.0625)) < 1e-9);
  CHECK(std::abs(ising_classical_ground(1.0) - (-1.25)) < 1e-9);
  CHECK(std::abs(ising_classical_ground(2.0) - (-2.0)) < 1e-9);
  CHECK(std::abs(ising_classical_ground(3.0) - (-3.0)) < 1e-9);
  CHECK(std::abs(ising_classical_ground(-1.0) - (-1.25)) < 1e-9);

  // product states can never beat the true ground energy
  CHECK(ising_classical_ground(1.0) > ising_ground(1.0));

  CHECK(std::abs(xy_classical_ground({1.0, 0.5, 0.4}) - (-1.0)) < 1e-6);
  CHECK(std::abs(xy_classical_ground({0.0, 0.0, 0.7}) - (-0.7)) < 1e-9);
  CHECK(std::abs(xy_classical_ground({1.0, 1.0, 0.0}) - (-1.0)) < 1e-9);
  CHECK(std::abs(xy_classical_ground({-2.0, -1.0, 0.0}) - (-2.0)) < 1e-9);
  CHECK(std::abs(xy_classical_ground({0.3, 0.8, 0.0}) - xy_classical_ground({0.8, 0.3, 0.0})) <
        1e-9);
}

TEST_CASE("grstate finds ground eigenvectors") {
  Vec g = grstate(oz());
  CHECK(std::abs(g(0)) < 1e-14);
  CHECK(std::abs(g(1) - 1.0) < 1e-14);

  // doubly degenerate ground space: any unit combination of |00> and |11>
  Vec gi = grstate(ising(0.0, 2));
  CHECK(std::abs(std::norm(gi(0)) + std::norm(gi(3)) - 1.0) < 1e-12);

  // graph-state Hamiltonian: all four stabilizers satisfied at once
  Mat hcl = -(mk({pb().e, pb().z, pb().x, pb().z}) + mk({pb().z, pb().x, pb().z, pb().e}) +
              mk({pb().e, pb().e, pb().z, pb().x}) + mk({pb().x, pb().z, pb().e, pb().e}));
  Vec gcl = grstate(Op(hcl));
  CHECK(std::abs(ex(Op(hcl), StateLike(gcl)).real() - (-4.0)) < 1e-10);
  CHECK(std::abs(std::abs(gcl.dot(cstate(4))) - 1.0) < 1e-9);

  // phase convention: dominant component is real positive
  Vec gh = grstate(heisenberg(4));
  Index pick = 0;
  double mx = 0.0;
  for (Index i = 0; i < gh.size(); ++i)
    if (std::abs(gh(i)) > mx) { mx = std::abs(gh(i)); pick = i; }
  CHECK(gh(pick).real() > 0.0);
  CHECK(std::abs(gh(pick).imag()) < 1e-12);

  // sparse route agrees with the dense solver on a gapped chain
  Op hd = ising(1.0, 10);
  Vec vd = grstate(hd);
  Vec vs = grstate(to_sparse(hd));
  CHECK(std::abs(ex(hd, StateLike(vs)).real() - mineig(hd)) < 1e-8);
  CHECK(std::abs(std::abs(vd.dot(vs)) - 1.0) < 1e-6);

  Mat bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(grstate(Op(bad)), std::invalid_argument);
}

TEST_CASE("thstate builds Gibbs states") {
  Mat cold = thstate(oz(), 1e-3);
  Mat proj = Mat::Zero(2, 2);
  proj(1, 1) = 1.0;
  CHECK(max_abs_diff(Op(cold), Op(proj)) < 1e-10);

  Mat hot = thstate(heisenberg(2), 1e9);
  CHECK(max_abs_diff(Op(hot), Op(Mat(0.25 * Mat::Identity(4, 4)))) < 1e-6);

  Op h = ising(0.8, 3);
  Mat rho = thstate(h, 1.3);
  CHECK(std::abs(rho.trace().real() - 1.0) < 1e-14);
  CHECK(std::abs(rho.trace().imag()) < 1e-14);
  Eigen::SelfAdjointEigenSolver<Mat> es(rho);
  CHECK(es.eigenvalues()(0) > -1e-14);
  CHECK(max_abs_diff(Op(Mat(h.make_dense() * rho)), Op(Mat(rho * h.make_dense()))) < 1e-12);

  CHECK_THROWS_AS(thstate(oz(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(thstate(oz(), -2.0), std::invalid_argument);
  Mat bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(thstate(Op(bad), 1.0), std::invalid_argument);
}

TEST_CASE("sparse chain shorthands") {
  CHECK(sising(1.0, 4).is_sparse());
  CHECK(max_abs_diff(sising(1.0, 4), ising(1.0, 4, Boundary::aperiodic, Storage::dense)) == 0.0);
  CHECK(scoll(ox(), 3).is_sparse());
  CHECK(snnchain(oz(), oz(), 3).is_sparse());
  CHECK(sheisenberg(3).is_sparse());
  CHECK(sxy_hamiltonian({1.0, 0.5, 0.1}, 3).is_sparse());
  CHECK(squditop(oz(), 1, 2).is_sparse());
  CHECK(stwoquditop(Op(standard_gates().u_cnot), 1, 2, 2).is_sparse());
  CHECK(sinteract(oz(), oz(), 1, 2, 2).is_sparse());
}
