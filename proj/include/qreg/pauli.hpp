#pragma once

#include <string>
#include <vector>

#include "qreg/op.hpp"
#include "qreg/types.hpp"

namespace qreg {

// One product term: coefficient times a letter word over {x, y, z, e},
// one letter per qubit, most significant qubit first.
struct PauliTerm {
  cxd coefficient;
  std::string letters;
};

struct PauliPolynomial {
  std::vector<PauliTerm> terms;  // equal word lengths, duplicate words merged
  int qubits() const { return terms.empty() ? 0 : static_cast<int>(terms[0].letters.size()); }
};

// State vector rendered as a superposition of computational basis strings,
// e.g. "0.70711|010>+0.70711|111>". Amplitudes below threshold are dropped;
// negative or complex amplitudes are parenthesized. Qubits only.
std::string printv(const Vec& v, double threshold = 1e-4);

// Operator rendered as a combination of Pauli letter words, the identity
// letter printed as '1' ("xx+yy+zz", "5*xy1+xyz"). Intended for Hermitian
// input: coefficients are the real parts of Tr(m W)/2^N. The latex flag
// switches to sigma-superscript rendering.
std::string decompose(const Op& m, bool latex = false, double threshold = 1e-14);

// Parse an expression like "5*xye+xyz" into terms; identity letter is 'e'.
// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*; term := [number '*']? word;
// word := [xyze]+. Whitespace between tokens is skipped. Errors carry the
// 0-based position in the input string.
PauliPolynomial parse_pauli(const std::string& s);

// Kronecker product of the letters of one word, most significant first
Mat pauli_word_matrix(const std::string& letters);

// Operator for a full expression
Op paulistr(const std::string& s);

}  // namespace qreg
