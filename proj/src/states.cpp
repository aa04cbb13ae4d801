#include "qreg/states.hpp"

#include <bit>
#include <cmath>

#include "qreg/core.hpp"

namespace qreg {

namespace {

const cxd I1(0, 1);

Mat mat2(cxd a, cxd b, cxd c, cxd d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

SpMat sparse2(const Mat& m) {
  return m.sparseView();
}

}  // namespace

GraphSpec::GraphSpec(Eigen::MatrixXi a) : adjacency(std::move(a)) {
  if (adjacency.rows() < 1 || adjacency.rows() != adjacency.cols())
    throw std::invalid_argument("adjacency must be square and nonempty");
  for (Index i = 0; i < adjacency.rows(); ++i)
    for (Index j = 0; j < adjacency.cols(); ++j) {
      int v = adjacency(i, j);
      if (v != 0 && v != 1) throw std::invalid_argument("adjacency entries must be 0 or 1");
      if (v != adjacency(j, i)) throw std::invalid_argument("adjacency must be symmetric");
      if (i == j && v != 0) throw std::invalid_argument("adjacency diagonal must be zero");
    }
}

GraphSpec line_graph(int n) {
  if (n < 2) throw std::invalid_argument("line graph needs at least 2 vertices");
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int k = 0; k + 1 < n; ++k) a(k, k + 1) = a(k + 1, k) = 1;
  return GraphSpec(std::move(a));
}

GraphSpec ring_graph(int n) {
  if (n < 3) throw std::invalid_argument("ring graph needs at least 3 vertices");
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    int l = (k + 1) % n;
    a(k, l) = a(l, k) = 1;
  }
  return GraphSpec(std::move(a));
}

Vec ghzstate(int n) {
  if (n < 1) throw std::invalid_argument("ghzstate needs n >= 1");
  Index dim = ipow(2, n);
  Vec v = Vec::Zero(dim);
  v(0) = v(dim - 1) = 1 / std::sqrt(2.0);
  return v;
}

Vec wstate(int n) {
  if (n < 2) throw std::invalid_argument("wstate needs n >= 2");
  Index dim = ipow(2, n);
  Vec v = Vec::Zero(dim);
  double amp = 1 / std::sqrt(static_cast<double>(n));
  for (int k = 0; k < n; ++k) v(Index(1) << k) = amp;
  return v;
}

Vec gstate(const GraphSpec& g) {
  int n = g.vertices();
  Index dim = ipow(2, n);
  Vec v = Vec::Constant(dim, 1 / std::sqrt(static_cast<double>(dim)));
  // controlled-Z across each edge: flip the sign where both qubits are set
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!g.adjacency(i, j)) continue;
      for (Index idx = 0; idx < dim; ++idx)
        if (((idx >> i) & 1) && ((idx >> j) & 1)) v(idx) = -v(idx);
    }
  return v;
}

Vec cstate(int n) {
  if (n < 3) throw std::invalid_argument("cstate needs n >= 3");
  return gstate(line_graph(n));
}

Vec rstate(int n) {
  if (n < 3) throw std::invalid_argument("rstate needs n >= 3");
  return gstate(ring_graph(n));
}

StabilizerSet gstate_stabilizer(const GraphSpec& g) {
  int n = g.vertices();
  Op x(sparse2(mat2(0, 1, 1, 0)));
  Op z(sparse2(mat2(1, 0, 0, -1)));
  Op e(sparse2(Mat::Identity(2, 2)));
  StabilizerSet set;
  for (int k = 1; k <= n; ++k) {
    std::vector<Op> factors;  // most significant (qubit n) first
    for (int q = n; q >= 1; --q) {
      if (q == k)
        factors.push_back(x);
      else if (g.adjacency(k - 1, q - 1))
        factors.push_back(z);
      else
        factors.push_back(e);
    }
    set.generators.push_back(mkron(factors));
  }
  return set;
}

Vec dstate(int m, int n) {
  if (n < 1) throw std::invalid_argument("dstate needs n >= 1");
  if (m < 0 || m > n) throw std::invalid_argument("excitation count must be within 0..n");
  Index dim = ipow(2, n);
  Vec v = Vec::Zero(dim);
  double amp = 1 / std::sqrt(static_cast<double>(binom(m, n)));
  for (Index idx = 0; idx < dim; ++idx)
    if (std::popcount(static_cast<std::uint64_t>(idx)) == m) v(idx) = amp;
  return v;
}

Mat mmstate(const RegisterShape& shape) {
  Index dim = shape.dim();
  return Mat::Identity(dim, dim) / static_cast<double>(dim);
}

Vec mestate(int d) {
  if (d < 2) throw std::invalid_argument("mestate needs d >= 2");
  Index dim = ipow(d, 2);
  Vec v = Vec::Zero(dim);
  double amp = 1 / std::sqrt(static_cast<double>(d));
  for (int k = 0; k < d; ++k) v(Index(k) * d + k) = amp;
  return v;
}

Vec singlet(int n) {
  if (n == 2) {
    Vec v = Vec::Zero(4);
    v(1) = 1 / std::sqrt(2.0);
    v(2) = -1 / std::sqrt(2.0);
    return v;
  }
  if (n == 4) {
    Vec v = Vec::Zero(16);
    double c = 1 / (2 * std::sqrt(3.0));
    v(12) = 2 * c;  // |1100>
    v(3) = 2 * c;   // |0011>
    v(5) = -c;      // |0101>
    v(10) = -c;     // |1010>
    v(6) = -c;      // |0110>
    v(9) = -c;      // |1001>
    return v;
  }
  throw std::invalid_argument("singlet is available for n = 2 and n = 4");
}

Mat smolinstate() {
  double r = 1 / std::sqrt(2.0);
  std::array<Vec, 4> bell;
  for (auto& b : bell) b = Vec::Zero(4);
  bell[0](0) = r, bell[0](3) = r;   // |00> + |11>
  bell[1](0) = r, bell[1](3) = -r;  // |00> - |11>
  bell[2](1) = r, bell[2](2) = r;   // |01> + |10>
  bell[3](1) = r, bell[3](2) = -r;  // |01> - |10>
  Mat rho = Mat::Zero(16, 16);
  for (const Vec& b : bell) {
    Mat p = b * b.adjoint();
    rho += kron2(p, p);
  }
  return rho / 4.0;
}

Mat bes_horodecki3x3(double a) {
  if (!(a > 0 && a < 1)) throw std::invalid_argument("parameter must lie strictly in (0, 1)");
  Mat m = Mat::Zero(9, 9);
  for (int k : {0, 1, 2, 3, 4, 5, 7}) m(k, k) = a;
  m(0, 4) = m(4, 0) = a;
  m(0, 8) = m(8, 0) = a;
  m(4, 8) = m(8, 4) = a;
  m(6, 6) = m(8, 8) = (1 + a) / 2;
  m(6, 8) = m(8, 6) = std::sqrt(1 - a * a) / 2;
  return m / (8 * a + 1);
}

Mat bes_horodecki4x2(double a) {
  if (!(a > 0 && a < 1)) throw std::invalid_argument("parameter must lie strictly in (0, 1)");
  // qubits 1,2 form the 4-dimensional side; qubit 3 is the 2-dimensional side
  Mat m = Mat::Zero(8, 8);
  for (int k : {0, 1, 2, 3, 5, 6}) m(k, k) = a;
  m(0, 5) = m(5, 0) = a;
  m(1, 6) = m(6, 1) = a;
  m(2, 7) = m(7, 2) = a;
  m(4, 4) = m(7, 7) = (1 + a) / 2;
  m(4, 7) = m(7, 4) = std::sqrt(1 - a * a) / 2;
  return m / (7 * a + 1);
}

Mat bes_upb3x3() {
  auto e = [](int k) {
    Vec v = Vec::Zero(3);
    v(k) = 1;
    return v;
  };
  double r = 1 / std::sqrt(2.0);
  Vec d01 = r * (e(0) - e(1));
  Vec d12 = r * (e(1) - e(2));
  Vec u = (e(0) + e(1) + e(2)) / std::sqrt(3.0);
  std::array<Vec, 5> tiles = {
      kron2(e(0), d01), kron2(e(2), d12), kron2(d01, e(2)), kron2(d12, e(0)), kron2(u, u)};
  Mat rho = Mat::Identity(9, 9);
  for (const Vec& t : tiles) rho -= t * t.adjoint();
  return rho / 4.0;
}

StandardGates standard_gates() {
  StandardGates g;
  g.u_cnot = Mat::Identity(4, 4);
  g.u_cnot(2, 2) = g.u_cnot(3, 3) = 0;
  g.u_cnot(2, 3) = g.u_cnot(3, 2) = 1;
  g.u_h = mat2(1, 1, 1, -1) / std::sqrt(2.0);
  return g;
}

PauliBasis pauli_basis() {
  PauliBasis b;
  b.x = mat2(0, 1, 1, 0);
  b.y = mat2(0, -I1, I1, 0);
  b.z = mat2(1, 0, 0, -1);
  b.e = Mat::Identity(2, 2);
  return b;
}

GellMannBasis gellmann_basis(Su3Variant variant) {
  GellMannBasis b;
  b.ee = Mat::Identity(3, 3);
  for (auto& m : b.m) m = Mat::Zero(3, 3);
  if (variant == Su3Variant::standard) {
    b.m[0](0, 1) = b.m[0](1, 0) = 1;
    b.m[1](0, 1) = -I1, b.m[1](1, 0) = I1;
    b.m[2](0, 0) = 1, b.m[2](1, 1) = -1;
    b.m[3](0, 2) = b.m[3](2, 0) = 1;
    b.m[4](0, 2) = -I1, b.m[4](2, 0) = I1;
    b.m[5](1, 2) = b.m[5](2, 1) = 1;
    b.m[6](1, 2) = -I1, b.m[6](2, 1) = I1;
    double s = 1 / std::sqrt(3.0);
    b.m[7](0, 0) = b.m[7](1, 1) = s, b.m[7](2, 2) = -2 * s;
    return b;
  }
  // spin-1 angular momentum components and their symmetrized products
  double r = 1 / std::sqrt(2.0);
  Mat jx = Mat::Zero(3, 3), jy = Mat::Zero(3, 3), jz = Mat::Zero(3, 3);
  jx(0, 1) = jx(1, 0) = jx(1, 2) = jx(2, 1) = r;
  jy(0, 1) = jy(1, 2) = -I1 * r, jy(1, 0) = jy(2, 1) = I1 * r;
  jz(0, 0) = 1, jz(2, 2) = -1;
  b.m[0] = jx;
  b.m[1] = jy;
  b.m[2] = jz;
  b.m[3] = jx * jx - jy * jy;
  b.m[4] = (3 * jz * jz - 2 * Mat::Identity(3, 3)) / std::sqrt(3.0);
  b.m[5] = jx * jy + jy * jx;
  b.m[6] = jy * jz + jz * jy;
  b.m[7] = jz * jx + jx * jz;
  return b;
}

std::vector<Mat> orthogobs(int d) {
  if (d < 2) throw std::invalid_argument("orthogobs needs d >= 2");
  std::vector<Mat> obs;
  obs.reserve(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d; ++k) {
    Mat m = Mat::Zero(d, d);
    m(k, k) = 1;
    obs.push_back(std::move(m));
  }
  double r = 1 / std::sqrt(2.0);
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      Mat m = Mat::Zero(d, d);
      m(k, l) = m(l, k) = r;
      obs.push_back(std::move(m));
    }
  for (int k = 0; k < d; ++k)
    for (int l = k + 1; l < d; ++l) {
      Mat m = Mat::Zero(d, d);
      m(k, l) = -I1 * r;
      m(l, k) = I1 * r;
      obs.push_back(std::move(m));
    }
  return obs;
}

}  // namespace qreg
