#include "qreg/chains.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qreg/core.hpp"
#include "qreg/linalg.hpp"
#include "qreg/permute.hpp"
#include "qreg/states.hpp"

namespace qreg {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

Op convert(const Op& op, Storage st) {
  return st == Storage::sparse ? to_sparse(op) : to_dense(op);
}

Op identity_op(Index side, Storage st) {
  return st == Storage::sparse ? Op(eye_sparse(side)) : Op(eye_dense(side));
}

void check_site(int k, int n, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": register size must be positive");
  if (k < 1 || k > n)
    throw std::invalid_argument(std::string(who) + ": site index " + std::to_string(k) +
                                " outside 1.." + std::to_string(n));
}

int local_dim(const Op& op, const char* who) {
  Index side = op.side();
  if (side < 2) throw std::invalid_argument(std::string(who) + ": operator side must be at least 2");
  return static_cast<int>(side);
}

void check_dense_fits(Index dim, const char* who) {
  if (dim > default_policy().max_dense_side)
    throw std::invalid_argument(std::string(who) + ": dense register of side " +
                                std::to_string(dim) + " exceeds the dense cap");
}

// storage for builders that take operator inputs: explicit request wins,
// otherwise any sparse input makes the result sparse
Storage follow_storage(std::optional<Storage> st, std::initializer_list<const Op*> ops) {
  if (st) return *st;
  for (const Op* op : ops)
    if (op->is_sparse()) return Storage::sparse;
  return Storage::dense;
}

// storage for builders with scalar inputs: dense while it fits the cap
Storage sized_storage(std::optional<Storage> st, Index dim) {
  if (st) return *st;
  return dim <= default_policy().max_dense_side ? Storage::dense : Storage::sparse;
}

// kron product with the given single-site operators placed at their qudits
// (1-based, ascending significance) and identities elsewhere
Op placed(const std::vector<std::pair<int, const Op*>>& site_ops, int n, int d, Storage st) {
  std::vector<Op> factors;
  factors.reserve(n);
  for (int q = n; q >= 1; --q) {
    const Op* hit = nullptr;
    for (const auto& [site, op] : site_ops)
      if (site == q) hit = op;
    factors.push_back(hit ? convert(*hit, st) : identity_op(d, st));
  }
  return mkron(factors);
}

void prepare_register(int n, int d, Storage st, const char* who) {
  Index dim = ipow(d, n);
  if (st == Storage::dense) check_dense_fits(dim, who);
}

Mat pauli_x() { return pauli_basis().x; }
Mat pauli_z() { return pauli_basis().z; }

// adaptive Simpson on [a, b]; tol is the absolute target for this panel
double simpson_panel(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_panel(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_panel(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_panel(f, a, b, fa, fm, fb, whole, tol, 48);
}

double dispersion(double k, double b) { return std::sqrt(1.0 + b * b - 2.0 * b * std::cos(k)); }

// log(2 cosh x) without overflow
double log2cosh(double x) {
  double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a));
}

// minimum of a smooth periodic function on [0, 2pi): coarse scan, then golden
// section on the bracketing cell pair
double min_scan_1d(const std::function<double(double)>& f) {
  const int grid = 1440;
  const double h = kTwoPi / grid;
  double best = std::numeric_limits<double>::infinity();
  double arg = 0.0;
  for (int i = 0; i < grid; ++i) {
    double v = f(i * h);
    if (v < best) { best = v; arg = i * h; }
  }
  double lo = arg - h, hi = arg + h;
  const double gr = 0.6180339887498949;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 90; ++it) {
    if (f1 < f2) {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = f(x1);
    } else {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = f(x2);
    }
  }
  return std::min({best, f1, f2});
}

// 2-D version: coarse grid, then alternating golden sections per coordinate
double min_scan_2d(const std::function<double(double, double)>& f) {
  const int grid = 360;
  const double h = kTwoPi / grid;
  double best = std::numeric_limits<double>::infinity();
  double a1 = 0.0, a2 = 0.0;
  for (int i = 0; i < grid; ++i)
    for (int j = 0; j < grid; ++j) {
      double v = f(i * h, j * h);
      if (v < best) { best = v; a1 = i * h; a2 = j * h; }
    }
  double width = h;
  for (int round = 0; round < 40; ++round) {
    auto g1 = [&](double x) { return f(x, a2); };
    double lo = a1 - width, hi = a1 + width;
    for (int it = 0; it < 40; ++it) {
      double x1 = hi - 0.6180339887498949 * (hi - lo);
      double x2 = lo + 0.6180339887498949 * (hi - lo);
      if (g1(x1) < g1(x2)) hi = x2; else lo = x1;
    }
    a1 = 0.5 * (lo + hi);
    auto g2 = [&](double y) { return f(a1, y); };
    lo = a2 - width; hi = a2 + width;
    for (int it = 0; it < 40; ++it) {
      double x1 = hi - 0.6180339887498949 * (hi - lo);
      double x2 = lo + 0.6180339887498949 * (hi - lo);
      if (g2(x1) < g2(x2)) hi = x2; else lo = x1;
    }
    a2 = 0.5 * (lo + hi);
    width *= 0.7;
  }
  return std::min(best, f(a1, a2));
}

Vec phase_fixed(Vec v) {
  Index pick = 0;
  double mx = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    double a = std::abs(v(i));
    if (a > mx) { mx = a; pick = i; }
  }
  if (mx > 0.0) v *= std::conj(v(pick)) / mx;
  return v;
}

}  // namespace

Op quditop(const Op& op, int k, int n, std::optional<Storage> st) {
  check_site(k, n, "quditop");
  int d = local_dim(op, "quditop");
  Storage target = follow_storage(st, {&op});
  prepare_register(n, d, target, "quditop");
  return placed({{k, &op}}, n, d, target);
}

Op twoquditop(const Op& op, int k1, int k2, int n, std::optional<Storage> st) {
  check_site(k1, n, "twoquditop");
  check_site(k2, n, "twoquditop");
  if (k1 == k2) throw std::invalid_argument("twoquditop: target sites must differ");
  Index side = op.side();
  int d = static_cast<int>(std::llround(std::sqrt(static_cast<double>(side))));
  if (d < 2 || static_cast<Index>(d) * d != side)
    throw std::invalid_argument("twoquditop: operator side is not a perfect square");
  Storage target = follow_storage(st, {&op});
  prepare_register(n, d, target, "twoquditop");

  Op base = convert(op, target);
  if (n > 2) {
    Index rest = ipow(d, n - 2);
    base = target == Storage::sparse
               ? Op(kron2(eye_sparse(rest), base.sparse()))
               : Op(kron2(eye_dense(rest), base.dense()));
  }

  // route base qudits (1, 2) to (k1, k2), remaining sites in ascending order
  std::vector<int> dest(n + 1, 0);  // base qudit -> register qudit
  dest[1] = k1;
  dest[2] = k2;
  int next = 3;
  for (int q = 1; q <= n; ++q)
    if (q != k1 && q != k2) dest[next++] = q;
  std::vector<int> inv(n + 1, 0);
  for (int q = 1; q <= n; ++q) inv[dest[q]] = q;
  Perm perm(n);
  for (int j = 0; j < n; ++j) perm[j] = inv[n - j];
  return reorder(base, perm, d);
}

Op interact(const Op& op1, const Op& op2, int n1, int n2, int n, std::optional<Storage> st) {
  check_site(n1, n, "interact");
  check_site(n2, n, "interact");
  if (n1 == n2) throw std::invalid_argument("interact: the two sites must differ");
  int d = local_dim(op1, "interact");
  if (op2.side() != d) throw std::invalid_argument("interact: operator sides differ");
  Storage target = follow_storage(st, {&op1, &op2});
  prepare_register(n, d, target, "interact");
  return placed({{n1, &op1}, {n2, &op2}}, n, d, target);
}

Op coll(const Op& op, int n, std::optional<Storage> st) {
  check_site(1, n, "coll");
  int d = local_dim(op, "coll");
  Storage target = follow_storage(st, {&op});
  prepare_register(n, d, target, "coll");
  Op total = placed({{1, &op}}, n, d, target);
  for (int k = 2; k <= n; ++k) total = total + placed({{k, &op}}, n, d, target);
  return total;
}

Op nnchain(const Op& op1, const Op& op2, int n, Boundary bd, std::optional<Storage> st) {
  if (n < 2) throw std::invalid_argument("nnchain: need at least two sites");
  int d = local_dim(op1, "nnchain");
  if (op2.side() != d) throw std::invalid_argument("nnchain: operator sides differ");
  Storage target = follow_storage(st, {&op1, &op2});
  prepare_register(n, d, target, "nnchain");
  Op total = placed({{1, &op1}, {2, &op2}}, n, d, target);
  for (int k = 2; k < n; ++k)
    total = total + placed({{k, &op1}, {k + 1, &op2}}, n, d, target);
  if (bd == Boundary::periodic)
    total = total + placed({{n, &op1}, {1, &op2}}, n, d, target);
  return total;
}

Op ising(double b, int n, Boundary bd, std::optional<Storage> st) {
  if (n < 2) throw std::invalid_argument("ising: need at least two sites");
  Storage target = sized_storage(st, ipow(2, n));
  Op z{pauli_z()}, x{pauli_x()};
  Op h = -nnchain(z, z, n, bd, target);
  return h + b * coll(x, n, target);
}

Op heisenberg(int n, Boundary bd, std::optional<Storage> st) {
  if (n < 2) throw std::invalid_argument("heisenberg: need at least two sites");
  Storage target = sized_storage(st, ipow(2, n));
  PauliBasis p = pauli_basis();
  Op h = nnchain(Op(p.x), Op(p.x), n, bd, target);
  h = h + nnchain(Op(p.y), Op(p.y), n, bd, target);
  return h + nnchain(Op(p.z), Op(p.z), n, bd, target);
}

Op xy_hamiltonian(const XYParams& p, int n, Boundary bd, std::optional<Storage> st) {
  if (n < 2) throw std::invalid_argument("xy_hamiltonian: need at least two sites");
  Storage target = sized_storage(st, ipow(2, n));
  PauliBasis pb = pauli_basis();
  Op h = p.jx * nnchain(Op(pb.x), Op(pb.x), n, bd, target);
  h = h + p.jy * nnchain(Op(pb.y), Op(pb.y), n, bd, target);
  return h + p.b * coll(Op(pb.x), n, target);
}

Op lattice2d(const Op& op1, const Op& op2, int nx, int ny, Boundary bd, Storage st) {
  if (nx < 2) throw std::invalid_argument("lattice2d: need at least two columns");
  if (ny < 1) throw std::invalid_argument("lattice2d: need at least one row");
  int d = local_dim(op1, "lattice2d");
  if (op2.side() != d) throw std::invalid_argument("lattice2d: operator sides differ");
  int n = nx * ny;
  prepare_register(n, d, st, "lattice2d");
  auto site = [nx](int ix, int iy) { return ix + nx * (iy - 1); };

  std::vector<std::pair<int, int>> bonds;
  for (int iy = 1; iy <= ny; ++iy)
    for (int ix = 1; ix < nx; ++ix) bonds.emplace_back(site(ix, iy), site(ix + 1, iy));
  for (int iy = 1; iy < ny; ++iy)
    for (int ix = 1; ix <= nx; ++ix) bonds.emplace_back(site(ix, iy), site(ix, iy + 1));
  if (bd == Boundary::periodic) {
    for (int iy = 1; iy <= ny; ++iy) bonds.emplace_back(site(nx, iy), site(1, iy));
    if (ny >= 2)
      for (int ix = 1; ix <= nx; ++ix) bonds.emplace_back(site(ix, ny), site(ix, 1));
  }

  Op total = placed({{bonds[0].first, &op1}, {bonds[0].second, &op2}}, n, d, st);
  for (std::size_t i = 1; i < bonds.size(); ++i)
    total = total + placed({{bonds[i].first, &op1}, {bonds[i].second, &op2}}, n, d, st);
  return total;
}

Op ising2d(double b, int nx, int ny, Boundary bd, Storage st) {
  Op z{pauli_z()}, x{pauli_x()};
  Op h = -lattice2d(z, z, nx, ny, bd, st);
  return h + b * coll(x, nx * ny, st);
}

double ising_ground(double b) {
  double val = integrate([b](double k) { return dispersion(k, b); }, 0.0, kTwoPi, 1e-12);
  return -val / kTwoPi;
}

double ising_ground(double b, int n) {
  if (n <= 0 || n % 2 != 0)
    throw std::invalid_argument("ising_ground: chain length must be a positive even number");
  Storage st = ipow(2, n) <= 512 ? Storage::dense : Storage::sparse;
  Op h = ising(b, n, Boundary::periodic, st);
  return mineig(h) / n;
}

double ising_free(double b, double t) {
  if (t <= 0.0) throw std::invalid_argument("ising_free: temperature must be positive");
  double val =
      integrate([b, t](double k) { return log2cosh(dispersion(k, b) / t); }, 0.0, kTwoPi, 1e-12);
  return -t * val / kTwoPi;
}

double ising_thermal(double b, double t) {
  if (t <= 0.0) throw std::invalid_argument("ising_thermal: temperature must be positive");
  double val = integrate(
      [b, t](double k) {
        double e = dispersion(k, b);
        return e * std::tanh(e / t);
      },
      0.0, kTwoPi, 1e-12);
  return -val / kTwoPi;
}

double ising_thermal(double b, double t, int n) {
  if (n < 2) throw std::invalid_argument("ising_thermal: need at least two sites");
  Op h = ising(b, n, Boundary::periodic);
  Mat rho = thstate(h, t);
  return ex(h, StateLike(rho)).real() / n;
}

double ising_classical_ground(double b) {
  double uniform = min_scan_1d([b](double th) {
    double c = std::cos(th);
    return -c * c + b * std::sin(th);
  });
  double staggered = min_scan_2d([b](double t1, double t2) {
    return -std::cos(t1) * std::cos(t2) + 0.5 * b * (std::sin(t1) + std::sin(t2));
  });
  return std::min(uniform, staggered);
}

double xy_classical_ground(const XYParams& p) {
  double uniform = min_scan_1d([&p](double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return p.jx * c * c + p.jy * s * s + p.b * c;
  });
  double staggered = min_scan_2d([&p](double p1, double p2) {
    return p.jx * std::cos(p1) * std::cos(p2) + p.jy * std::sin(p1) * std::sin(p2) +
           0.5 * p.b * (std::cos(p1) + std::cos(p2));
  });
  return std::min(uniform, staggered);
}

Vec grstate(const Op& h, const NumericPolicy& pol) {
  if (!is_hermitian(h, pol.herm_tol))
    throw std::invalid_argument("grstate: operator is not Hermitian");
  if (h.is_sparse() && h.side() > 512) {
    Vec v;
    lanczos_ground(h.sparse(), v);
    return phase_fixed(std::move(v));
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(h.make_dense(pol));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("grstate: eigensolver failed to converge");
  return phase_fixed(es.eigenvectors().col(0));
}

Mat thstate(const Op& h, double t, const NumericPolicy& pol) {
  if (t <= 0.0) throw std::invalid_argument("thstate: temperature must be positive");
  if (!is_hermitian(h, pol.herm_tol))
    throw std::invalid_argument("thstate: operator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(h.make_dense(pol));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("thstate: eigensolver failed to converge");
  Eigen::VectorXd lam = es.eigenvalues();
  Eigen::VectorXd w = (-(lam.array() - lam(0)) / t).exp().matrix();
  Mat rho = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().adjoint();
  return rho / w.sum();
}

}  // namespace qreg
