#pragma once

#include <optional>

#include "qreg/op.hpp"
#include "qreg/types.hpp"

namespace qreg {

enum class Boundary { aperiodic, periodic };

// couplings for the anisotropic XY chain: jx XX + jy YY + b X
struct XYParams {
  double jx = 0.0;
  double jy = 0.0;
  double b = 0.0;
};

// Single-site operator embedded into an n-qudit register at qudit k (1-based,
// qudit 1 least significant). The local dimension is taken from op. Storage
// follows the input unless overridden.
Op quditop(const Op& op, int k, int n, std::optional<Storage> st = {});

// Two-qudit operator (side d^2) embedded so that its low qudit acts on k1 and
// its high qudit on k2. Implemented by placing op on qudits (2,1) and
// conjugating with the permutation matrix that routes those slots to (k2,k1).
Op twoquditop(const Op& op, int k1, int k2, int n, std::optional<Storage> st = {});

// quditop(op1, n1, n) * quditop(op2, n2, n); n1 != n2
Op interact(const Op& op1, const Op& op2, int n1, int n2, int n,
            std::optional<Storage> st = {});

// collective operator: sum of quditop(op, k, n) over all sites
Op coll(const Op& op, int n, std::optional<Storage> st = {});

// nearest-neighbour chain: sum_k op1^(k) op2^(k+1), plus the op1^(n) op2^(1)
// wrap term when periodic
Op nnchain(const Op& op1, const Op& op2, int n,
           Boundary bd = Boundary::aperiodic, std::optional<Storage> st = {});

// Transverse-field Ising chain  -sum zz + b sum x.  Without an explicit
// storage request these builders go dense while the matrix fits the dense cap
// and sparse beyond it.
Op ising(double b, int n, Boundary bd = Boundary::aperiodic,
         std::optional<Storage> st = {});

// isotropic Heisenberg chain: sum of xx + yy + zz over bonds
Op heisenberg(int n, Boundary bd = Boundary::aperiodic,
              std::optional<Storage> st = {});

// anisotropic XY chain: jx sum xx + jy sum yy + b sum x
Op xy_hamiltonian(const XYParams& p, int n, Boundary bd = Boundary::aperiodic,
                  std::optional<Storage> st = {});

// Rectangular-lattice coupling sum_<ij> op1^(i) op2^(j) with sites numbered
// ix + nx*(iy-1), ix fastest. Periodic adds one wrap bond per row and per
// column even when it duplicates an existing bond (nx = 2 or ny = 2 doubles
// those couplings). ny = 1 degenerates to a chain; vertical bonds vanish.
Op lattice2d(const Op& op1, const Op& op2, int nx, int ny,
             Boundary bd = Boundary::aperiodic, Storage st = Storage::sparse);

// 2-D transverse-field Ising model  -lattice2d(z, z) + b sum x
Op ising2d(double b, int nx, int ny, Boundary bd = Boundary::aperiodic,
           Storage st = Storage::sparse);

// Ground-state energy per site of the periodic transverse-field Ising chain.
// The two-argument form diagonalizes the 2^n chain (n even); the one-argument
// form is the thermodynamic limit via quadrature of the dispersion.
double ising_ground(double b);
double ising_ground(double b, int n);

// free energy and internal energy per site in the thermodynamic limit, t > 0
double ising_free(double b, double t);
double ising_thermal(double b, double t);

// finite-chain internal energy per site at temperature t, periodic boundary
double ising_thermal(double b, double t, int n);

// Classical (product-state) ground-state energies per site, minimized over
// uniform and two-sublattice spin configurations.
double ising_classical_ground(double b);
double xy_classical_ground(const XYParams& p);

// Ground eigenvector of a Hermitian operator, unit norm. Degenerate lowest
// eigenvalues resolve to the eigensolver's first column; the phase is fixed by
// making the largest-magnitude component real positive.
Vec grstate(const Op& h, const NumericPolicy& pol = default_policy());

// Thermal (Gibbs) state exp(-h/t) / tr exp(-h/t), computed from the
// eigendecomposition with the spectrum shifted for overflow safety; t > 0.
Mat thstate(const Op& h, double t, const NumericPolicy& pol = default_policy());

// sparse-forcing shorthands for the chain builders
inline Op squditop(const Op& op, int k, int n) {
  return quditop(op, k, n, Storage::sparse);
}
inline Op stwoquditop(const Op& op, int k1, int k2, int n) {
  return twoquditop(op, k1, k2, n, Storage::sparse);
}
inline Op sinteract(const Op& op1, const Op& op2, int n1, int n2, int n) {
  return interact(op1, op2, n1, n2, n, Storage::sparse);
}
inline Op scoll(const Op& op, int n) { return coll(op, n, Storage::sparse); }
inline Op snnchain(const Op& op1, const Op& op2, int n,
                   Boundary bd = Boundary::aperiodic) {
  return nnchain(op1, op2, n, bd, Storage::sparse);
}
inline Op sising(double b, int n, Boundary bd = Boundary::aperiodic) {
  return ising(b, n, bd, Storage::sparse);
}
inline Op sheisenberg(int n, Boundary bd = Boundary::aperiodic) {
  return heisenberg(n, bd, Storage::sparse);
}
inline Op sxy_hamiltonian(const XYParams& p, int n,
                          Boundary bd = Boundary::aperiodic) {
  return xy_hamiltonian(p, n, bd, Storage::sparse);
}

}  // namespace qreg
