#pragma once

#include <vector>

#include "ppcc/pairing/group.hpp"

namespace ppcc::pairing {

/// Hash-based short signatures: Y = xP, sigma = x * H0(m).
struct PlainKeyPair {
  mpz_class x;
  G1Point y;

  static PlainKeyPair generate(const GroupParams& g, Rng& rng);
  static PlainKeyPair from_secret(const GroupParams& g, const mpz_class& x);
};

struct PlainSignature {
  G1Point sigma;

  friend bool operator==(const PlainSignature&, const PlainSignature&) = default;
};

struct BatchEntry {
  G1Point y;
  Bytes message;
  PlainSignature sig;
};

PlainSignature sign_plain(const GroupParams& g, ByteView message, const PlainKeyPair& key);

/// e(P, sigma) == e(Y, H0(m)).
bool verify_plain(const GroupParams& g, ByteView message, const PlainSignature& sig, const G1Point& y);

/// e(P, sum sigma_i) == prod e(Y_i, H0(m_i)). Throws empty_list.
bool batch_verify(const GroupParams& g, const std::vector<BatchEntry>& entries);

}  // namespace ppcc::pairing
