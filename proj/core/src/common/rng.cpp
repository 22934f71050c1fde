#include "ppcc/common/rng.hpp"

#include "ppcc/common/error.hpp"

namespace ppcc {

double Rng::uniform01() {
  // 53 random mantissa bits.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw Error(Errc::invalid_argument, "empty integer range");
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  return dist(engine_);
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  for (std::size_t i = 0; i < n; i += 8) {
    auto w = engine_();
    for (std::size_t j = 0; j < 8 && i + j < n; ++j) out[i + j] = static_cast<std::uint8_t>(w >> (8 * j));
  }
  return out;
}

mpz_class Rng::below(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw Error(Errc::invalid_argument, "non-positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned excess = static_cast<unsigned>(nbytes * 8 - bits);
  for (;;) {
    auto raw = bytes(nbytes);
    raw[0] &= static_cast<std::uint8_t>(0xFF >> excess);
    mpz_class v = mpz_from_bytes(raw);
    if (v < bound) return v;
  }
}

mpz_class Rng::exact_bits(unsigned bits) {
  if (bits == 0) throw Error(Errc::invalid_argument, "zero bit length");
  mpz_class top = 1;
  top <<= (bits - 1);
  return top + below(top);
}

}  // namespace ppcc
