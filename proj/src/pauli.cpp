#include "qreg/pauli.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "qreg/core.hpp"
#include "qreg/states.hpp"

namespace qreg {

namespace {

// 5 significant digits, shortest form ("%.5g")
std::string fmt5(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", x);
  return buf;
}

// shortest decimal that round-trips to the same double
std::string shortest(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string amp_str(cxd a) {
  const double eps = 1e-12;
  double re = std::abs(a.real()) < eps ? 0.0 : a.real();
  double im = std::abs(a.imag()) < eps ? 0.0 : a.imag();
  if (im == 0.0) {
    if (re >= 0) return fmt5(re);
    return "(" + fmt5(re) + ")";
  }
  std::string s = "(" + fmt5(re);
  s += im >= 0 ? '+' : '-';
  s += fmt5(std::abs(im));
  s += "i)";
  return s;
}

constexpr char kLetters[4] = {'1', 'x', 'y', 'z'};

// per letter and input bit: the column bit and entry of the single nonzero
// in that row of the 2x2 matrix
inline int col_bit(int letter, int b) { return (letter == 1 || letter == 2) ? 1 - b : b; }
inline cxd row_val(int letter, int b) {
  switch (letter) {
    case 0:
    case 1: return 1;
    case 2: return b == 0 ? cxd(0, -1) : cxd(0, 1);
    default: return b == 0 ? 1 : -1;
  }
}

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
}

bool is_word_char(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'e'; }

}  // namespace

std::string printv(const Vec& v, double threshold) {
  if (v.size() < 2) throw std::invalid_argument("state vector must cover at least one qubit");
  int n = qsize(v, 2);
  std::string out;
  for (Index idx = 0; idx < v.size(); ++idx) {
    if (std::abs(v(idx)) < threshold) continue;
    if (!out.empty()) out += '+';
    out += amp_str(v(idx));
    out += '|';
    for (int q = n; q >= 1; --q) out += char('0' + ((idx >> (q - 1)) & 1));
    out += '>';
  }
  return out.empty() ? "0" : out;
}

std::string decompose(const Op& m, bool latex, double threshold) {
  Mat dm = m.make_dense();
  int n = log_base(dm.rows(), 2);
  if (n < 1) throw std::invalid_argument("operator side must be a power of 2");
  const Index dim = Index(1) << n;
  const std::int64_t words = std::int64_t(1) << (2 * n);

  std::string out;
  std::vector<int> letter(n);  // letter index per bit position
  for (std::int64_t w = 0; w < words; ++w) {
    for (int b = 0; b < n; ++b) letter[b] = static_cast<int>((w >> (2 * b)) & 3);

    // Tr(m W) using the single nonzero per row of the word matrix W
    cxd tr = 0;
    for (Index j = 0; j < dim; ++j) {
      Index c = 0;
      cxd val = 1;
      for (int b = 0; b < n; ++b) {
        int jb = static_cast<int>((j >> b) & 1);
        c |= Index(col_bit(letter[b], jb)) << b;
        val *= row_val(letter[b], jb);
      }
      tr += dm(c, j) * val;
    }
    double coeff = tr.real() / static_cast<double>(dim);
    if (std::abs(coeff) < threshold) continue;

    bool neg = coeff < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    double mag = std::abs(coeff);
    if (mag != 1.0) {
      out += shortest(mag);
      if (!latex) out += '*';
    }
    if (latex) {
      bool any = false;
      for (int p = 0; p < n; ++p) {
        int l = letter[n - 1 - p];  // most significant letter first
        if (l == 0) continue;
        any = true;
        out += "\\sigma_";
        out += kLetters[l];
        out += "^{(" + std::to_string(n - p) + ")}";
      }
      if (!any) out += '1';
    } else {
      for (int p = 0; p < n; ++p) out += kLetters[letter[n - 1 - p]];
    }
  }
  return out.empty() ? "0" : out;
}

PauliPolynomial parse_pauli(const std::string& s) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto at_end = [&] { return i >= s.size(); };

  skip_ws();
  if (at_end()) fail(i, "empty expression");

  PauliPolynomial poly;
  double sign = 1;
  if (s[i] == '+' || s[i] == '-') {
    sign = s[i] == '-' ? -1 : 1;
    ++i;
  }

  std::size_t first_word_pos = 0;
  while (true) {
    skip_ws();
    if (at_end()) fail(i, "expected a term");

    double coeff = 1;
    char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.')) ++i;
      // exponent part only when well formed, so a following 'e' can still
      // start a word of identity letters
      if (!at_end() && (s[i] == 'e' || s[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
          i = j;
          while (!at_end() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        }
      }
      auto res = std::from_chars(s.data() + start, s.data() + i, coeff);
      if (res.ec != std::errc() || res.ptr != s.data() + i)
        fail(start, "malformed number");
      skip_ws();
      if (at_end() || s[i] != '*') fail(i, "expected '*' after coefficient");
      ++i;
      skip_ws();
    }

    if (at_end() || !is_word_char(s[i])) fail(i, "expected a Pauli word over x, y, z, e");
    std::size_t word_pos = i;
    std::string word;
    while (!at_end() && is_word_char(s[i])) word += s[i++];

    if (poly.terms.empty()) {
      first_word_pos = word_pos;
    } else if (word.size() != poly.terms[0].letters.size()) {
      fail(word_pos, "word length differs from the first word at position " +
                         std::to_string(first_word_pos));
    }
    poly.terms.push_back({sign * coeff, std::move(word)});

    skip_ws();
    if (at_end()) break;
    if (s[i] == '+') sign = 1;
    else if (s[i] == '-') sign = -1;
    else fail(i, "expected '+' or '-' between terms");
    ++i;
  }

  // merge duplicate words, preserving first-occurrence order
  PauliPolynomial merged;
  for (auto& t : poly.terms) {
    bool found = false;
    for (auto& m : merged.terms)
      if (m.letters == t.letters) {
        m.coefficient += t.coefficient;
        found = true;
        break;
      }
    if (!found) merged.terms.push_back(std::move(t));
  }
  return merged;
}

Mat pauli_word_matrix(const std::string& letters) {
  if (letters.empty()) throw std::invalid_argument("empty Pauli word");
  PauliBasis p = pauli_basis();
  std::vector<Mat> factors;
  factors.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'x': factors.push_back(p.x); break;
      case 'y': factors.push_back(p.y); break;
      case 'z': factors.push_back(p.z); break;
      case 'e': factors.push_back(p.e); break;
      default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
    }
  }
  return mkron(factors);
}

Op paulistr(const std::string& s) {
  PauliPolynomial poly = parse_pauli(s);
  const Index dim = ipow(2, poly.qubits());
  Mat sum = Mat::Zero(dim, dim);
  for (const auto& t : poly.terms) sum += t.coefficient * pauli_word_matrix(t.letters);
  return Op(std::move(sum));
}

}  // namespace qreg
