#pragma once

#include <vector>

#include "ppcc/dcc/levels.hpp"
#include "ppcc/paillier/paillier.hpp"
#include "ppcc/protocol/messages.hpp"
#include "ppcc/protocol/token.hpp"

namespace ppcc::protocol {

struct DccParticipant {
  EsuId id = 0;
  pairing::PlainKeyPair identity;
  std::uint64_t demand_kw = 0;
  double priority = 0.0;
};

/// An ESU currently acting as aggregating node.
struct DccNode {
  std::uint32_t node = 0;
  paillier::KeyPair paillier;
  pairing::PlainKeyPair sign;
};

struct DccConfig {
  dcc::LevelLayout layout;
  double capacity_kw = 0.0;
  std::size_t proxies_per_esu = 2;
  FreshnessPolicy freshness;
};

/// Net masks for n senders: each picks min(k, n-1) distinct proxies among
/// the others, shares are drawn from [0, phi), and every share is added by
/// its owner and subtracted by its proxy, so the masks sum to exactly zero.
std::vector<mpz_class> assign_net_masks(std::size_t n, std::size_t k, const mpz_class& phi, Rng& rng);

DccReport dcc_make_report(const pairing::GroupParams& g, const DccParticipant& esu, const DccNode& node,
                          const paillier::SlotRandomizer& r, const mpz_class& net_mask, const DccConfig& cfg,
                          Timestamp now);

/// Node side: batch-verifies the reports (falling back to one-by-one checks
/// to name the culprit), multiplies the ciphertexts, decrypts and signs the
/// per-level totals. Throws empty_list, unknown_identity, mixed_slot,
/// stale_timestamp, batch_verification_failed or aggregate_overflow.
DccBroadcast dcc_aggregate(const pairing::GroupParams& g, const DccNode& node,
                           const std::vector<DccReport>& reports, const std::vector<DccParticipant>& roster,
                           const DccConfig& cfg, const paillier::SlotId& slot, Timestamp now);

struct DccRoundResult {
  std::vector<DccBroadcast> broadcasts;  // one per node, identical totals
  dcc::Threshold threshold;
  std::vector<double> allotments;  // per participant, kW
  std::size_t wire_bytes = 0;      // framed reports and broadcasts
};

/// One full slot: masking, reports to every node, aggregation, broadcast and
/// local allotment. With several nodes the broadcasts are cross-checked and
/// a disagreement throws inconsistent_broadcast.
DccRoundResult dcc_round(const pairing::GroupParams& g, const std::vector<DccParticipant>& esus,
                         const std::vector<const DccNode*>& nodes, const DccConfig& cfg,
                         const paillier::SlotId& slot, Timestamp now, Rng& rng);

/// What the ESU computes from a verified broadcast.
double dcc_local_allotment(const DccParticipant& esu, const dcc::LevelVector& totals, const DccConfig& cfg,
                           dcc::Threshold* threshold_out = nullptr);

}  // namespace ppcc::protocol
