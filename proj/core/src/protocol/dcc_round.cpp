#include "ppcc/protocol/dcc_round.hpp"

#include <algorithm>
#include <numeric>

#include "ppcc/common/error.hpp"

namespace ppcc::protocol {

using pairing::GroupParams;

std::vector<mpz_class> assign_net_masks(std::size_t n, std::size_t k, const mpz_class& phi, Rng& rng) {
  std::vector<mpz_class> net(n, 0);
  if (n < 2) return net;
  const std::size_t proxies = std::min(k, n - 1);
  if (proxies == 0) return net;
  std::vector<std::size_t> others(n - 1);
  for (std::size_t owner = 0; owner < n; ++owner) {
    std::iota(others.begin(), others.end(), 0);
    for (auto& o : others) o += (o >= owner) ? 1 : 0;
    std::shuffle(others.begin(), others.end(), rng.engine());
    std::vector<paillier::PartyId> ids(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(proxies));
    auto set = paillier::generate_mask_shares(static_cast<paillier::PartyId>(owner), ids, rng, phi);
    net[owner] += set.own_mask;
    for (const auto& s : set.shares) net[s.proxy] -= s.value;
  }
  return net;
}

DccReport dcc_make_report(const GroupParams& g, const DccParticipant& esu, const DccNode& node,
                          const paillier::SlotRandomizer& r, const mpz_class& net_mask, const DccConfig& cfg,
                          Timestamp now) {
  const mpz_class m = dcc::encode_request(esu.demand_kw, esu.priority, cfg.layout);
  const auto ct = paillier::masked_encrypt(m, r, net_mask, node.paillier.pk);
  DccReport rep;
  rep.id = esu.id;
  rep.node = node.node;
  rep.slot = r.slot;
  rep.ciphertext = paillier::encode_ciphertext(ct.c, node.paillier.pk);
  rep.ts = now;
  rep.sig = pairing::sign_plain(g, rep.signed_bytes(), esu.identity);
  return rep;
}

DccBroadcast dcc_aggregate(const GroupParams& g, const DccNode& node, const std::vector<DccReport>& reports,
                           const std::vector<DccParticipant>& roster, const DccConfig& cfg,
                           const paillier::SlotId& slot, Timestamp now) {
  if (reports.empty()) throw Error(Errc::empty_list, "no reports");
  const auto& pk = node.paillier.pk;
  cfg.layout.validate(pk.bits() - 1);

  std::vector<pairing::BatchEntry> batch;
  std::vector<paillier::MaskedCiphertext> cts;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& rep = reports[i];
    const long idx = static_cast<long>(i);
    auto who = std::find_if(roster.begin(), roster.end(), [&](const DccParticipant& p) { return p.id == rep.id; });
    if (who == roster.end()) throw Error(Errc::unknown_identity, "report from unknown ESU", idx);
    if (!(rep.slot == slot) || rep.node != node.node) throw Error(Errc::mixed_slot, "report for another slot or node", idx);
    cfg.freshness.check(rep.ts, now, idx);
    batch.push_back({who->identity.y, rep.signed_bytes(), rep.sig});
    try {
      cts.push_back({paillier::decode_ciphertext(rep.ciphertext, pk), rep.slot});
    } catch (const Error& e) {
      throw Error(Errc::malformed_frame, e.what(), idx);
    }
  }
  if (!pairing::batch_verify(g, batch)) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!pairing::verify_plain(g, batch[i].message, batch[i].sig, batch[i].y)) {
        throw Error(Errc::batch_verification_failed, "report signature", static_cast<long>(i));
      }
    }
    throw Error(Errc::batch_verification_failed, "batch check failed");
  }

  const mpz_class total = paillier::aggregate_and_decrypt(cts, node.paillier);
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > cfg.layout.total_bits()) {
    throw Error(Errc::aggregate_overflow, "aggregate exceeds the level layout");
  }
  DccBroadcast b;
  b.node = node.node;
  b.slot = slot;
  b.level_bits = cfg.layout.bits;
  b.totals = dcc::decode_total(total, cfg.layout);
  b.ts = now;
  b.sig = pairing::sign_plain(g, b.signed_bytes(g), node.sign);
  return b;
}

double dcc_local_allotment(const DccParticipant& esu, const dcc::LevelVector& totals, const DccConfig& cfg,
                           dcc::Threshold* threshold_out) {
  const auto th = dcc::find_threshold(totals, cfg.capacity_kw);
  if (threshold_out != nullptr) *threshold_out = th;
  return dcc::allotment(static_cast<double>(esu.demand_kw), dcc::level_of(esu.priority, cfg.layout), totals, th);
}

DccRoundResult dcc_round(const GroupParams& g, const std::vector<DccParticipant>& esus,
                         const std::vector<const DccNode*>& nodes, const DccConfig& cfg,
                         const paillier::SlotId& slot, Timestamp now, Rng& rng) {
  if (esus.empty() || nodes.empty()) throw Error(Errc::empty_list, "round needs ESUs and a node");
  DccRoundResult out;
  for (const DccNode* node : nodes) {
    const auto r = paillier::derive_slot_randomizer(slot, node->paillier.pk);
    const auto masks = assign_net_masks(esus.size(), cfg.proxies_per_esu, node->paillier.pk.n2, rng);
    std::vector<DccReport> reports;
    reports.reserve(esus.size());
    for (std::size_t i = 0; i < esus.size(); ++i) {
      reports.push_back(dcc_make_report(g, esus[i], *node, r, masks[i], cfg, now));
    }
    for (const auto& rep : reports) out.wire_bytes += to_frame(g, MsgKind::dcc_report, rep).size();
    out.broadcasts.push_back(dcc_aggregate(g, *node, reports, esus, cfg, slot, now));
    out.wire_bytes += to_frame(g, MsgKind::dcc_broadcast, out.broadcasts.back()).size();
  }
  for (std::size_t i = 0; i < out.broadcasts.size(); ++i) {
    const auto& b = out.broadcasts[i];
    if (!pairing::verify_plain(g, b.signed_bytes(g), b.sig, nodes[i]->sign.y)) {
      throw Error(Errc::bad_signature, "broadcast signature", static_cast<long>(i));
    }
    if (b.totals != out.broadcasts.front().totals) {
      throw Error(Errc::inconsistent_broadcast, "aggregating nodes disagree", static_cast<long>(i));
    }
  }
  const auto& totals = out.broadcasts.front().totals;
  for (const auto& esu : esus) out.allotments.push_back(dcc_local_allotment(esu, totals, cfg, &out.threshold));
  return out;
}

}  // namespace ppcc::protocol
