#pragma once

#include <cstdint>
#include <random>

#include "gtoda/matrix.hpp"
#include "gtoda/quantum_poly.hpp"

namespace gtoda {

/// Seeded generators for property tests and the verification suites.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

  /// Small rational p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational(int bound = 3);

  /// Invertible matrix with small rational entries (rejection sampling).
  OperatorMatrix<Rational> invertible(std::size_t n);

  /// Random element of U(gl_n) of PBW degree <= 1.
  UEAElement linear_element(int n);

  /// Matrix over U(gl_n) (x) Weyl (x) Q[eps] whose entries have degree <= 1
  /// in the generators, with occasional u, D and eps factors.
  OperatorMatrix<QuantumPoly> linear_matrix(int n, std::size_t size);

  std::mt19937_64& engine() { return rng_; }

 private:
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

}  // namespace gtoda
