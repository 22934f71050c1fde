#pragma once

#include <cstdint>
#include <vector>

#include "ppcc/pairing/group.hpp"

namespace ppcc::pairing {

/// Signer key for partially blind signatures: P_pub = d*P.
struct PbsKeyPair {
  mpz_class d;
  G1Point p_pub;

  static PbsKeyPair generate(const GroupParams& g, Rng& rng);
  /// Throws invalid_argument unless 0 < d < q.
  static PbsKeyPair from_secret(const GroupParams& g, const mpz_class& d);
};

/// Information agreed in the clear between user and signer: token expiry
/// (days since the Unix epoch) and community id.
struct CommonInfo {
  std::int64_t expiry_day = 0;
  std::uint32_t community = 0;

  static constexpr std::size_t kEncodedSize = 12;

  /// 8-byte little-endian expiry followed by 4-byte little-endian id.
  Bytes encode() const;
  static CommonInfo decode(ByteView data);

  friend bool operator==(const CommonInfo&, const CommonInfo&) = default;
};

struct BlindingState {
  mpz_class r;
  CommonInfo c;
};

struct PbsSignature {
  G1Point sigma;

  friend bool operator==(const PbsSignature&, const PbsSignature&) = default;
};

struct AggregateSignature {
  G1Point sigma;
  std::size_t count = 0;
};

struct Blinded {
  G1Point point;
  BlindingState state;
};

/// H(c)*P + P_pub, the left pairing argument of every verification.
G1Point pbs_verification_base(const GroupParams& g, const CommonInfo& c, const G1Point& p_pub);

/// H0(m || c).
G1Point pbs_message_point(const GroupParams& g, ByteView message, const CommonInfo& c);

/// B = H0(m || c) + r(H(c)P + P_pub) with fresh nonzero r.
Blinded blind(const GroupParams& g, ByteView message, const CommonInfo& c, const G1Point& p_pub, Rng& rng);

/// (H(c) + d)^{-1} * B. Throws degenerate_common_info when H(c) + d = 0 mod q.
G1Point pbs_sign(const GroupParams& g, const G1Point& blinded, const CommonInfo& c, const PbsKeyPair& key);

/// sigma = S - rP.
PbsSignature unblind(const GroupParams& g, const G1Point& signed_blinded, const BlindingState& state);

bool pbs_verify(const GroupParams& g, ByteView message, const CommonInfo& c, const PbsSignature& sig,
                const G1Point& p_pub);

/// Throws empty_list for an empty input.
AggregateSignature aggregate_signatures(const GroupParams& g, const std::vector<PbsSignature>& sigs);

/// Throws length_mismatch when messages.size() != agg.count.
bool verify_aggregate(const GroupParams& g, const std::vector<Bytes>& messages, const CommonInfo& c,
                      const AggregateSignature& agg, const G1Point& p_pub);

}  // namespace ppcc::pairing
