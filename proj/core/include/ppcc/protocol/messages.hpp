#pragma once

#include <cstdint>
#include <vector>

#include "ppcc/common/bytes.hpp"
#include "ppcc/common/hash.hpp"
#include "ppcc/dcc/levels.hpp"
#include "ppcc/paillier/paillier.hpp"
#include "ppcc/pairing/pbs.hpp"
#include "ppcc/pairing/plain_sig.hpp"

namespace ppcc::protocol {

using Timestamp = std::int64_t;  // simulated seconds since the Unix epoch
using EsuId = std::uint32_t;

inline constexpr std::uint8_t kWireVersion = 1;

enum class MsgKind : std::uint8_t {
  msg1 = 1,
  msg2 = 2,
  msg3 = 3,
  msg4 = 4,
  msg5 = 5,
  dcc_report = 6,
  dcc_broadcast = 7,
};

/// The part of a token the CC signs blindly: M = encode(PK) || wrapped key.
struct TokenBody {
  pairing::G1Point one_time_pk;
  Bytes wrapped_key;

  Bytes message(const pairing::GroupParams& g) const;
};

struct Token {
  TokenBody body;
  pairing::CommonInfo c;
  pairing::PbsSignature sig;

  /// H(M || c); the key of the reuse registry.
  Digest hash(const pairing::GroupParams& g) const;
};

/// Token request: the CC sees the identity but only a blinded token.
struct Msg1 {
  EsuId id = 0;
  pairing::G1Point blinded;
  Timestamp ts = 0;
  pairing::PlainSignature sig;  // identity key over everything above

  Bytes signed_bytes(const pairing::GroupParams& g) const;
};

struct Msg2 {
  pairing::G1Point signed_blinded;
};

/// Charging request, signed with the token's one-time key.
struct Msg3 {
  Token token;
  Bytes payload;  // sealed (S, T, P)
  Timestamp ts = 0;
  pairing::PlainSignature sig;

  Bytes signed_bytes(const pairing::GroupParams& g) const;
};

struct Msg4Entry {
  TokenBody body;
  Bytes payload;
};

/// One slot's requests relayed by the aggregator, with the CC token
/// signatures folded into one.
struct Msg4 {
  pairing::CommonInfo c;
  Timestamp ts = 0;
  std::vector<Msg4Entry> entries;
  pairing::G1Point sigma_agg;
  pairing::PlainSignature sig;  // aggregator key

  Bytes signed_bytes(const pairing::GroupParams& g) const;
};

struct Msg5Entry {
  pairing::G1Point one_time_pk;
  Bytes sealed_schedule;  // sealed (y, p)
};

struct Msg5 {
  Timestamp ts = 0;
  std::vector<Msg5Entry> entries;
  pairing::PlainSignature sig;  // CC key

  Bytes signed_bytes(const pairing::GroupParams& g) const;
};

/// Masked, level-packed demand from one ESU to one aggregating node.
struct DccReport {
  EsuId id = 0;
  std::uint32_t node = 0;
  paillier::SlotId slot;
  Bytes ciphertext;  // fixed width of the node's N^2
  Timestamp ts = 0;
  pairing::PlainSignature sig;

  Bytes signed_bytes() const;
};

/// Decrypted per-level totals, broadcast by an aggregating node.
struct DccBroadcast {
  std::uint32_t node = 0;
  paillier::SlotId slot;
  std::uint32_t level_bits = 0;
  dcc::LevelVector totals;
  Timestamp ts = 0;
  pairing::PlainSignature sig;

  Bytes signed_bytes(const pairing::GroupParams& g) const;
};

// Plaintexts carried inside sealed boxes.
struct RequestPayload {
  double soc = 0.0;
  double tcc = 1.0;
  double demand_kw = 0.0;

  Bytes encode() const;
  static RequestPayload decode(ByteView data);
};

struct SchedulePayload {
  std::uint8_t kind = 0;  // coord::GrantKind
  double granted_kw = 0.0;

  Bytes encode() const;
  static SchedulePayload decode(ByteView data);
};

// Message bodies (no frame header).
Bytes encode_body(const pairing::GroupParams& g, const Msg1& m);
Bytes encode_body(const pairing::GroupParams& g, const Msg2& m);
Bytes encode_body(const pairing::GroupParams& g, const Msg3& m);
Bytes encode_body(const pairing::GroupParams& g, const Msg4& m);
Bytes encode_body(const pairing::GroupParams& g, const Msg5& m);
Bytes encode_body(const pairing::GroupParams& g, const DccReport& m);
Bytes encode_body(const pairing::GroupParams& g, const DccBroadcast& m);

Msg1 decode_msg1(const pairing::GroupParams& g, ByteView body);
Msg2 decode_msg2(const pairing::GroupParams& g, ByteView body);
Msg3 decode_msg3(const pairing::GroupParams& g, ByteView body);
Msg4 decode_msg4(const pairing::GroupParams& g, ByteView body);
Msg5 decode_msg5(const pairing::GroupParams& g, ByteView body);
DccReport decode_dcc_report(const pairing::GroupParams& g, ByteView body);
DccBroadcast decode_dcc_broadcast(const pairing::GroupParams& g, ByteView body);

struct Frame {
  MsgKind kind;
  Bytes body;
};

inline constexpr std::size_t kFrameHeaderBytes = 6;

/// version (1) | kind (1) | body length, u32 little-endian (4) | body
Bytes encode_frame(MsgKind kind, ByteView body);
/// Throws version_mismatch, or malformed_frame on unknown kinds, truncation
/// and trailing bytes.
Frame decode_frame(ByteView data);

template <typename M>
Bytes to_frame(const pairing::GroupParams& g, MsgKind kind, const M& m) {
  return encode_frame(kind, encode_body(g, m));
}

}  // namespace ppcc::protocol
