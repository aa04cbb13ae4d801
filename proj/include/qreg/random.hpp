#pragma once

#include <cstdint>
#include <random>

#include "qreg/types.hpp"

namespace qreg {

// Seeded stream of uniform and standard-normal variates. Same seed, same
// sequence; use one instance per thread. normal() is Box-Muller over the
// uniform stream, so golden values are stable across standard libraries.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

  double uniform();  // [0, 1)
  double normal();   // mean 0, variance 1

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// uniform pure state on the d^n sphere: standard-normal real and imaginary
// parts, normalized
Vec rvec(const RegisterShape& shape, RandomSource& rng);

// tensor product of n independent single-qudit rvec draws, first draw on the
// most significant qudit
Vec rproduct(const RegisterShape& shape, RandomSource& rng);

// Hilbert-Schmidt-uniform density matrix: uniform pure state on 2n qudits
// with the upper half traced out
Mat rdmat(const RegisterShape& shape, RandomSource& rng);

// Haar-uniform unitary: QR of a complex Gaussian matrix, columns rephased so
// the triangular factor has a real-positive diagonal
Mat runitary(const RegisterShape& shape, RandomSource& rng);

struct TwirlResult {
  Mat state;
  double difference = 0.0;  // sum_kl |in_kl - out_kl|^2
};

// Project rho toward the commutant of U x ... x U by iterated averaging with
// fresh Haar unitaries applied identically to every qudit. Returns the
// averaged state and the square-sum difference from the input.
TwirlResult twirl(const StateLike& rho, RandomSource& rng, int d = 2, int n_it = 100);

struct Twirl2Result {
  double difference = 0.0;  // largest square-sum change seen
  Mat unitary;              // the single-qudit factor that produced it
};

// Probe invariance of rho under multilateral rotations: the worst square-sum
// difference between rho and (U x ... x U) rho (U x ... x U)^† over n_it draws.
Twirl2Result twirl2(const StateLike& rho, RandomSource& rng, int d = 2, int n_it = 100);

}  // namespace qreg
