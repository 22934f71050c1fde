#include "ppcc/sim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <optional>

#include "ppcc/common/error.hpp"
#include "ppcc/coord/split.hpp"
#include "ppcc/protocol/ccc.hpp"
#include "ppcc/protocol/dcc_round.hpp"

namespace ppcc::sim {

namespace {

using protocol::Timestamp;

// Midnight, so a 30-slot run crosses one day boundary.
constexpr Timestamp kEpoch = 1'700'006'400;

struct EsuState {
  double soc = 0.0;
  int tcc = 1;
  bool done = false;
  coord::ChargeRecord record;
};

struct Submission {
  std::size_t owner = 0;
  coord::ChargingState state;  // what goes on the wire
  coord::Request request;
};

// Everything the crypto mode keeps between slots.
struct CryptoWorld {
  pairing::GroupParamsPtr g;
  Rng rng;
  std::vector<pairing::PlainKeyPair> identities;
  std::unique_ptr<protocol::ChargingController> cc;
  std::unique_ptr<protocol::Aggregator> aggregator;
  std::vector<protocol::DccNode> nodes;

  CryptoWorld(const SimConfig& cfg) : g(pairing::setup_pairing(cfg.pairing_bits)), rng(cfg.seed ^ 0xc0ffee5eedULL) {
    for (int i = 0; i < cfg.n_esus; ++i) identities.push_back(pairing::PlainKeyPair::generate(*g, rng));
    if (cfg.scheme == Scheme::ccc) {
      protocol::CcConfig cc_cfg;
      cc_cfg.weights = cfg.weights;
      // Enough for a sub-request in every slot of a day.
      cc_cfg.tokens_per_day = std::max(cc_cfg.tokens_per_day, cfg.n_subrequests * 24);
      cc = std::make_unique<protocol::ChargingController>(g, cc_cfg, rng);
      aggregator = std::make_unique<protocol::Aggregator>(g, cc_cfg.freshness, rng);
      cc->set_aggregator_key(aggregator->public_key());
      for (int i = 0; i < cfg.n_esus; ++i) {
        cc->enroll(static_cast<protocol::EsuId>(i), {identities[static_cast<std::size_t>(i)].y, 1});
      }
    } else if (cfg.scheme == Scheme::dcc) {
      for (int k = 0; k < cfg.dcc_nodes; ++k) {
        nodes.push_back({static_cast<std::uint32_t>(k), paillier::keygen(cfg.paillier_bits, rng),
                         pairing::PlainKeyPair::generate(*g, rng)});
      }
    }
  }
};

std::size_t frame_bytes(const pairing::GroupParams& g, protocol::MsgKind kind, const auto& m) {
  return protocol::to_frame(g, kind, m).size();
}

// Grants for one CCC slot through tokens, the aggregator and the CC.
std::vector<double> ccc_crypto_slot(CryptoWorld& w, const SimConfig& cfg, const std::vector<Submission>& subs,
                                    Timestamp now, SlotRecord& rec) {
  using protocol::MsgKind;
  const auto& g = *w.g;
  const auto cc_info = w.cc->public_info();
  std::vector<protocol::OwnedToken> tokens;
  std::vector<protocol::Msg3> msg3s;
  for (const auto& s : subs) {
    const auto id = static_cast<protocol::EsuId>(s.owner);
    auto [m1, pending] = protocol::esu_request_token(g, id, w.identities[s.owner], 1, cc_info, now, w.rng);
    const auto m2 = w.cc->issue_token(m1, now);
    tokens.push_back(protocol::esu_finish_token(g, m2, std::move(pending), cc_info));
    msg3s.push_back(protocol::esu_build_msg3(g, tokens.back(), {s.state.soc, s.state.tcc, s.state.demand_kw}, now));
    rec.bytes += frame_bytes(g, MsgKind::msg1, m1) + frame_bytes(g, MsgKind::msg2, m2) +
                 frame_bytes(g, MsgKind::msg3, msg3s.back());
  }
  const auto m4 = w.aggregator->process(msg3s, now);
  const auto result = w.cc->process_msg4(m4, now, cfg.capacity_kw);
  rec.bytes += frame_bytes(g, MsgKind::msg4, m4) + frame_bytes(g, MsgKind::msg5, result.msg5);

  std::vector<double> grants;
  for (const auto& t : tokens) grants.push_back(protocol::esu_read_schedule(g, result.msg5, t, cc_info).granted_kw);
  return grants;
}

}  // namespace

SimOutcome simulate(const SimConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::optional<CryptoWorld> world;
  if (cfg.crypto && cfg.scheme != Scheme::fcfs) world.emplace(cfg);

  const double b = cfg.battery_kw;
  std::vector<EsuState> esus(static_cast<std::size_t>(cfg.n_esus));
  for (auto& e : esus) {
    e.soc = rng.uniform(cfg.soc_min_kw, cfg.soc_max_kw) / b;
    e.tcc = static_cast<int>(rng.uniform_int(cfg.tcc_min, cfg.tcc_max));
    e.record.demand_kw = (1.0 - e.soc) * b;
    if (e.soc >= 1.0) e.done = true;
  }

  const coord::SplitConfig split_cfg{cfg.spread, static_cast<double>(cfg.tcc_max), 16};
  dcc::LevelLayout layout = cfg.layout;
  protocol::DccConfig dcc_cfg{layout, cfg.capacity_kw, static_cast<std::size_t>(cfg.proxies), {}};

  SimOutcome out;
  for (int slot = 0; slot < cfg.slots; ++slot) {
    SlotRecord rec;
    rec.slot = slot;
    const Timestamp now = kEpoch + slot * dcc_cfg.freshness.slot_seconds;

    std::vector<Submission> subs;
    for (std::size_t i = 0; i < esus.size(); ++i) {
      const auto& e = esus[i];
      if (e.done) continue;
      ++rec.active;
      const coord::ChargingState state{e.soc, static_cast<double>(e.tcc), (1.0 - e.soc) * b};
      if (cfg.scheme == Scheme::ccc && cfg.n_subrequests > 1) {
        const auto split = coord::split_request(state, cfg.n_subrequests, cfg.weights, split_cfg, rng);
        out.clamped += split.clamped_count;
        const double part_kw = state.demand_kw / cfg.n_subrequests;
        for (const auto& p : split.parts) {
          const coord::ChargingState wire{p.soc, p.tcc, part_kw};
          subs.push_back({i, wire, {coord::priority(wire, cfg.weights), part_kw}});
        }
      } else {
        double demand = state.demand_kw;
        // DCC packs whole kW.
        if (cfg.scheme == Scheme::dcc) demand = std::ceil(demand);
        subs.push_back({i, state, {coord::priority(state, cfg.weights), demand}});
      }
    }
    if (subs.empty()) break;
    rec.requests = static_cast<int>(subs.size());

    std::vector<coord::Request> reqs;
    for (const auto& s : subs) reqs.push_back(s.request);

    std::vector<double> grants;
    switch (cfg.scheme) {
      case Scheme::fcfs:
        grants = coord::fcfs_schedule(reqs, cfg.capacity_kw).granted_kw;
        rec.messages = 2 * subs.size();
        break;
      case Scheme::ccc:
        rec.messages = 3 * subs.size() + 2;
        if (world) {
          grants = ccc_crypto_slot(*world, cfg, subs, now, rec);
        } else {
          grants = coord::knapsack_schedule(reqs, cfg.capacity_kw).granted_kw;
        }
        break;
      case Scheme::dcc: {
        std::vector<protocol::DccParticipant> parts;
        for (const auto& s : subs) {
          const auto id = static_cast<protocol::EsuId>(s.owner);
          parts.push_back({id, world ? world->identities[s.owner] : pairing::PlainKeyPair{},
                           static_cast<std::uint64_t>(s.request.demand_kw), s.request.priority});
        }
        rec.messages = (subs.size() + 1) * static_cast<std::size_t>(cfg.dcc_nodes);
        if (world) {
          std::vector<const protocol::DccNode*> nodes;
          for (const auto& n : world->nodes) nodes.push_back(&n);
          const paillier::SlotId sid{protocol::day_of(now), static_cast<std::uint32_t>(slot)};
          auto round = protocol::dcc_round(*world->g, parts, nodes, dcc_cfg, sid, now, world->rng);
          grants = std::move(round.allotments);
          rec.bytes += round.wire_bytes;
          out.level_totals.push_back(round.broadcasts.front().totals);
        } else {
          dcc::LevelVector totals(static_cast<std::size_t>(layout.levels));
          for (const auto& p : parts) totals[static_cast<std::size_t>(dcc::level_of(p.priority, layout) - 1)] += p.demand_kw;
          for (const auto& p : parts) grants.push_back(protocol::dcc_local_allotment(p, totals, dcc_cfg));
          out.level_totals.push_back(std::move(totals));
        }
        break;
      }
    }

    std::vector<double> per_esu(esus.size(), 0.0);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      per_esu[subs[k].owner] += grants[k];
      rec.granted_kw += grants[k];
    }
    for (std::size_t i = 0; i < esus.size(); ++i) {
      auto& e = esus[i];
      if (e.done) continue;
      if (per_esu[i] > 0.0) {
        const double absorbed = std::min(per_esu[i], (1.0 - e.soc) * b);
        e.record.granted_kw += absorbed;
        e.soc = std::min(1.0, e.soc + absorbed / b);
      } else if (cfg.consumption_kw > 0.0) {
        const double used = std::min(
            e.soc * b, rng.uniform(cfg.consumption_kw - cfg.consumption_spread_kw,
                                   cfg.consumption_kw + cfg.consumption_spread_kw));
        e.soc -= used / b;
        e.record.demand_kw += used;
      }
      e.tcc -= 1;
      if (e.soc >= 1.0 - 1e-9) {
        e.soc = 1.0;
        e.done = true;
        ++rec.charged_full;
      } else if (e.tcc <= 0) {
        e.done = true;
        e.record.expired = true;
        ++rec.expired;
      }
    }
    out.grants.push_back(std::move(grants));
    out.slots.push_back(rec);
  }

  for (const auto& e : esus) out.records.push_back(e.record);
  out.charging_index = coord::charging_index(out.records);
  return out;
}

CsvReport run_scenario(const SimConfig& cfg) {
  const auto outcome = simulate(cfg);
  CsvReport r;
  r.experiment = std::string("run/") + std::string(scheme_name(cfg.scheme));
  r.seed = cfg.seed;
  r.config_digest = cfg.digest();
  r.notes.push_back("charging-index: " + std::to_string(outcome.charging_index));
  r.notes.push_back(std::string("mode: ") + (cfg.crypto ? "crypto" : "plaintext"));
  r.header = {"slot", "active", "requests", "granted_kw", "charged_full", "expired", "messages", "bytes"};
  for (const auto& s : outcome.slots) {
    r.add_row({std::to_string(s.slot), std::to_string(s.active), std::to_string(s.requests), fmt(s.granted_kw),
               std::to_string(s.charged_full), std::to_string(s.expired), std::to_string(s.messages),
               std::to_string(s.bytes)});
  }
  return r;
}

}  // namespace ppcc::sim
