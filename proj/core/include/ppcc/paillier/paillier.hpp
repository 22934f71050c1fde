#pragma once

#include <cstdint>
#include <stop_token>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppcc/common/bytes.hpp"
#include "ppcc/common/rng.hpp"

namespace ppcc::paillier {

struct PublicKey {
  mpz_class n;
  mpz_class n2;  // N^2
  mpz_class g;   // 1 + N

  unsigned bits() const { return static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); }
  /// Width of a serialized ciphertext (bytes of N^2).
  std::size_t ciphertext_bytes() const { return byte_width(n2); }

  static PublicKey from_modulus(const mpz_class& n);
};

struct KeyPair {
  PublicKey pk;
  mpz_class p, q;
  mpz_class delta;  // lcm(p-1, q-1)
  mpz_class mu;     // L(g^delta mod N^2)^{-1} mod N
};

/// Generates an RSA-style modulus of exactly `bits` bits. `bits` must be even
/// and at least 32; sizes below 1024 are toy keys for tests. Gives up with
/// key_generation_failed after a bounded number of attempts or when `stop`
/// is requested.
KeyPair keygen(unsigned bits, Rng& rng, std::stop_token stop = {});

/// Throws plaintext_overflow unless 0 <= m < N.
mpz_class encrypt(const mpz_class& m, const PublicKey& pk, Rng& rng);
/// Encryption with an explicit randomizer; r must be a unit mod N.
mpz_class encrypt_with(const mpz_class& m, const mpz_class& r, const PublicKey& pk);
mpz_class decrypt(const mpz_class& c, const KeyPair& sk);
/// E(a) * E(b) mod N^2.
mpz_class add(const mpz_class& a, const mpz_class& b, const PublicKey& pk);

Bytes encode_ciphertext(const mpz_class& c, const PublicKey& pk);
mpz_class decode_ciphertext(ByteView data, const PublicKey& pk);

/// Charging slot: day number and slot index within the day.
struct SlotId {
  std::int64_t day = 0;
  std::uint32_t sn = 0;

  Bytes encode() const;
  friend bool operator==(const SlotId&, const SlotId&) = default;
};

/// Public randomizer shared by every sender in a slot.
struct SlotRandomizer {
  SlotId slot;
  mpz_class r;
};

/// r = H_wide(day || sn) mod N^2, incremented until gcd(r, N) = 1.
SlotRandomizer derive_slot_randomizer(const SlotId& slot, const PublicKey& pk);

using PartyId = std::uint32_t;

struct MaskShare {
  PartyId proxy;
  mpz_class value;
};

/// One sender's secret mask, split into shares held by its proxies.
struct MaskShareSet {
  PartyId owner;
  std::vector<MaskShare> shares;
  mpz_class own_mask;  // exact integer sum of the shares
};

/// Shares are uniform in [0, phi). Throws empty_proxy_list, or invalid_proxy
/// when the owner appears among its proxies.
MaskShareSet generate_mask_shares(PartyId owner, const std::vector<PartyId>& proxies, Rng& rng,
                                  const mpz_class& phi);

/// own_mask minus every share this party holds for others, as an exact
/// signed integer. Summed over all parties the result is exactly zero when
/// each share is held by one proxy.
mpz_class net_mask(const MaskShareSet& own, const std::vector<mpz_class>& held_for_others);

struct MaskedCiphertext {
  mpz_class c;
  SlotId slot;
};

/// C = g^m * r^(N + s_net) mod N^2. A negative exponent goes through r^{-1}.
MaskedCiphertext masked_encrypt(const mpz_class& m, const SlotRandomizer& r, const mpz_class& s_net,
                                const PublicKey& pk);

/// Product of the ciphertexts, then decryption. Throws empty_list or
/// mixed_slot.
mpz_class aggregate_and_decrypt(const std::vector<MaskedCiphertext>& cts, const KeyPair& sk);

}  // namespace ppcc::paillier
