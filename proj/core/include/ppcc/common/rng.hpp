#pragma once

#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "ppcc/common/bytes.hpp"

namespace ppcc {

/// Deterministic random source passed explicitly to every randomized
/// operation. Not a CSPRNG: runs must be reproducible from a seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform01();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi] (inclusive).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  Bytes bytes(std::size_t n);
  /// Uniform in [0, bound) by rejection sampling; bound must be positive.
  mpz_class below(const mpz_class& bound);
  /// Uniform integer with exactly `bits` bits (top bit set).
  mpz_class exact_bits(unsigned bits);

  /// Independent child stream, derived deterministically.
  Rng fork() { return Rng(next_u64() ^ 0x9e3779b97f4a7c15ULL); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace ppcc
