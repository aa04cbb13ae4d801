#pragma once

#include <array>

#include "qreg/op.hpp"
#include "qreg/types.hpp"

namespace qreg {

// Interaction pattern for graph states: symmetric 0/1 adjacency, zero diagonal.
struct GraphSpec {
  Eigen::MatrixXi adjacency;
  explicit GraphSpec(Eigen::MatrixXi a);
  int vertices() const { return static_cast<int>(adjacency.rows()); }
};

GraphSpec line_graph(int n);
GraphSpec ring_graph(int n);

// Commuting generators, one per qubit; each fixes the associated graph state.
struct StabilizerSet {
  std::vector<Op> generators;
};

Vec ghzstate(int n);
Vec wstate(int n);
Vec cstate(int n);  // linear cluster state
Vec rstate(int n);  // ring cluster state
Vec gstate(const GraphSpec& g);
StabilizerSet gstate_stabilizer(const GraphSpec& g);
Vec dstate(int m, int n);  // symmetric Dicke state with m excitations
Mat mmstate(const RegisterShape& shape);
Vec mestate(int d);  // maximally entangled pair of d-level qudits
Vec singlet(int n);  // n = 2 or 4
Mat smolinstate();

// one-parameter bound entangled families, 0 < a < 1
Mat bes_horodecki3x3(double a);
Mat bes_horodecki4x2(double a);
Mat bes_upb3x3();

// CNOT acts on two qubits with qubit 2 as control, qubit 1 as target
struct StandardGates {
  Mat u_cnot;
  Mat u_h;
};
StandardGates standard_gates();

struct PauliBasis {
  Mat x, y, z, e;
};
PauliBasis pauli_basis();

enum class Su3Variant { standard, alternative };

// standard: the eight Gell-Mann matrices; alternative: spin-1 dipole plus
// quadrupole operators (three angular momentum components and five anticommutators)
struct GellMannBasis {
  std::array<Mat, 8> m;
  Mat ee;
};
GellMannBasis gellmann_basis(Su3Variant variant = Su3Variant::standard);

// d^2 Hermitian observables, orthonormal under the Hilbert-Schmidt inner product
std::vector<Mat> orthogobs(int d);

}  // namespace qreg
