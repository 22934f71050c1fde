#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ppcc/coord/priority.hpp"
#include "ppcc/coord/schedule.hpp"
#include "ppcc/protocol/messages.hpp"
#include "ppcc/protocol/sym.hpp"
#include "ppcc/protocol/token.hpp"

namespace ppcc::protocol {

/// What every participant knows about the charging controller.
struct CcPublicInfo {
  pairing::G1Point pbs_pub;
  pairing::G1Point kem_pub;
  pairing::G1Point sign_pub;
  int token_validity_days = 1;
};

struct RosterEntry {
  pairing::G1Point identity_pub;
  std::uint32_t community = 0;
};

using Roster = std::map<EsuId, RosterEntry>;

/// Common information for a token issued at `now`.
pairing::CommonInfo token_common_info(Timestamp now, std::uint32_t community, int validity_days);

/// ESU-side state between Msg1 and Msg2.
struct PendingToken {
  pairing::BlindingState blinding;
  TokenBody body;
  SymKey key;
  pairing::PlainKeyPair one_time;
};

/// A usable token with the secrets only its holder knows.
struct OwnedToken {
  Token token;
  SymKey key;
  pairing::PlainKeyPair one_time;
};

std::pair<Msg1, PendingToken> esu_request_token(const pairing::GroupParams& g, EsuId id,
                                                const pairing::PlainKeyPair& identity, std::uint32_t community,
                                                const CcPublicInfo& cc, Timestamp now, Rng& rng);

/// Unblinds Msg2 and checks the result; throws bad_signature if the CC
/// signed under different common information.
OwnedToken esu_finish_token(const pairing::GroupParams& g, const Msg2& reply, PendingToken pending,
                            const CcPublicInfo& cc);

/// Throws expired_token once the token's expiry day has passed.
Msg3 esu_build_msg3(const pairing::GroupParams& g, const OwnedToken& token, const RequestPayload& request,
                    Timestamp now);

/// Throws bad_signature, entry_missing or decrypt_failure.
SchedulePayload esu_read_schedule(const pairing::GroupParams& g, const Msg5& msg, const OwnedToken& token,
                                  const CcPublicInfo& cc);

struct CcConfig {
  int tokens_per_day = 16;
  int token_validity_days = 1;
  FreshnessPolicy freshness;
  coord::WeightConfig weights;
};

/// Everything the CC derived from one Msg4, in Msg4 entry order.
struct CcSlotResult {
  Msg5 msg5;
  std::vector<RequestPayload> requests;
  std::vector<coord::Request> priorities;
  coord::Schedule schedule;
};

class ChargingController {
 public:
  ChargingController(pairing::GroupParamsPtr g, CcConfig cfg, Rng& rng);

  CcPublicInfo public_info() const;
  void enroll(EsuId id, RosterEntry entry) { roster_[id] = entry; }
  const Roster& roster() const { return roster_; }
  void set_aggregator_key(const pairing::G1Point& pub) { aggregator_pub_ = pub; }

  /// Throws unknown_identity, stale_timestamp, bad_signature,
  /// replayed_message, token_quota_exceeded or degenerate_common_info.
  Msg2 issue_token(const Msg1& msg, Timestamp now);

  /// Throws bad_signature, stale_timestamp, expired_token, token_reuse,
  /// aggregate_verification_failed or decrypt_failure.
  CcSlotResult process_msg4(const Msg4& msg, Timestamp now, double capacity_kw);

  const TokenRegistry& registry() const { return registry_; }

 private:
  pairing::GroupParamsPtr g_;
  CcConfig cfg_;
  pairing::PbsKeyPair pbs_;
  KemKeyPair kem_;
  pairing::PlainKeyPair sign_;
  Roster roster_;
  std::optional<pairing::G1Point> aggregator_pub_;
  TokenRegistry registry_;
  std::map<std::pair<EsuId, std::int64_t>, int> issued_;
  std::map<Digest, Timestamp> recent_msg1_;
};

class Aggregator {
 public:
  Aggregator(pairing::GroupParamsPtr g, FreshnessPolicy freshness, Rng& rng);

  pairing::G1Point public_key() const { return sign_.y; }

  /// Validates every request and folds the token signatures. Throws
  /// empty_list, stale_timestamp, mixed_common_info, bad_token_signature or
  /// token_reuse, with the offending index.
  Msg4 process(const std::vector<Msg3>& msgs, Timestamp now);

 private:
  pairing::GroupParamsPtr g_;
  FreshnessPolicy freshness_;
  pairing::PlainKeyPair sign_;
  std::map<Digest, std::int64_t> seen_;
};

}  // namespace ppcc::protocol
