#pragma once

#include <array>
#include <cstdint>

#include "ppcc/common/bytes.hpp"
#include "ppcc/common/rng.hpp"
#include "ppcc/pairing/group.hpp"

namespace ppcc::protocol {

using SymKey = std::array<std::uint8_t, 32>;

/// Nonce counters for the two uses of a token's one-time key.
enum class SealDirection : std::uint8_t { request = 0, schedule = 1 };

constexpr std::size_t kSealOverhead = 16;  // Poly1305 tag

SymKey random_sym_key(Rng& rng);

/// ChaCha20-Poly1305 with a nonce derived from `dir`; each key seals at most
/// one message per direction.
Bytes seal(const SymKey& key, SealDirection dir, ByteView plaintext, ByteView associated = {});
/// Throws decrypt_failure on authentication failure.
Bytes open(const SymKey& key, SealDirection dir, ByteView sealed, ByteView associated = {});

/// Hashed-ElGamal key encapsulation on G1.
struct KemKeyPair {
  mpz_class x;
  pairing::G1Point y;

  static KemKeyPair generate(const pairing::GroupParams& g, Rng& rng);
};

/// R || seal(K) under a key derived from r*Y; R = rP.
Bytes wrap_key(const pairing::GroupParams& g, const SymKey& k, const pairing::G1Point& kem_pub, Rng& rng);
std::size_t wrapped_key_bytes(const pairing::GroupParams& g);
/// Throws decrypt_failure or invalid_encoding.
SymKey unwrap_key(const pairing::GroupParams& g, ByteView wrapped, const KemKeyPair& kem);

}  // namespace ppcc::protocol
