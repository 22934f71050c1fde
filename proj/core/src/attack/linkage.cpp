#include "ppcc/attack/linkage.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "ppcc/common/error.hpp"
#include "ppcc/coord/schedule.hpp"

namespace ppcc::attack {

std::string_view attack_name(AttackKind k) {
  switch (k) {
    case AttackKind::soc: return "soc";
    case AttackKind::tcc: return "tcc";
    case AttackKind::both: return "soc+tcc";
    case AttackKind::priority: return "priority";
  }
  return "?";
}

std::string_view resolution_name(Resolution r) { return r == Resolution::low ? "low" : "high"; }

void AttackConfig::validate() const {
  if (!(threshold >= 0.0) || !(priority_threshold >= 0.0)) {
    throw Error(Errc::invalid_parameters, "thresholds must be nonnegative");
  }
}

double quantize_soc(double kw, Resolution r) {
  return r == Resolution::low ? std::round(kw) : std::round(kw * 10.0) / 10.0;
}

LinkageResult link_slots(const std::vector<Observation>& slot_j, const std::vector<Observation>& slot_j1,
                         const AttackConfig& cfg, Rng& rng) {
  cfg.validate();
  struct Candidate {
    double distance;
    std::uint64_t tie;
    std::size_t a, b;
  };
  std::vector<Candidate> pairs;
  const double limit = cfg.kind == AttackKind::priority ? cfg.priority_threshold : cfg.threshold;
  for (std::size_t a = 0; a < slot_j.size(); ++a) {
    const auto& x = slot_j[a];
    // An ESU charging this slot draws from the grid instead of its battery.
    const double soc_pred = x.soc_kw + (x.granted_kw > 0.0 ? x.granted_kw : -cfg.expected_consumption_kw);
    const double tcc_pred = x.tcc - 1.0;
    for (std::size_t b = 0; b < slot_j1.size(); ++b) {
      const auto& y = slot_j1[b];
      const double ds = cfg.soc_weight * (y.soc_kw - soc_pred);
      const double dt = cfg.tcc_weight * (y.tcc - tcc_pred);
      double d = 0.0;
      switch (cfg.kind) {
        case AttackKind::soc: d = std::abs(ds); break;
        case AttackKind::tcc: d = std::abs(dt); break;
        case AttackKind::both: d = std::hypot(ds, dt); break;
        case AttackKind::priority: d = std::abs(y.priority - x.priority); break;
      }
      if (d < limit) pairs.push_back({d, rng.next_u64(), a, b});
    }
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Candidate& l, const Candidate& r) { return std::tie(l.distance, l.tie) < std::tie(r.distance, r.tie); });

  std::vector<bool> used_a(slot_j.size()), used_b(slot_j1.size());
  LinkageResult out{0, static_cast<int>(slot_j.size())};
  for (const auto& p : pairs) {
    if (used_a[p.a] || used_b[p.b]) continue;
    used_a[p.a] = used_b[p.b] = true;
    if (slot_j[p.a].owner == slot_j1[p.b].owner) ++out.linked;
  }
  return out;
}

double baseline_success(const BaselineScenario& sc, const AttackConfig& cfg, Rng& rng) {
  if (sc.n_esus < 1 || sc.tcc_max < 1 || !(sc.soc_max_kw >= sc.soc_min_kw)) {
    throw Error(Errc::invalid_parameters, "baseline scenario out of range");
  }
  std::vector<Observation> a, b;
  for (int i = 0; i < sc.n_esus; ++i) {
    const auto owner = static_cast<std::uint32_t>(i);
    const double soc = rng.uniform(sc.soc_min_kw, sc.soc_max_kw);
    const double tcc = static_cast<double>(rng.uniform_int(1, sc.tcc_max));
    a.push_back({quantize_soc(soc, sc.resolution), tcc, 0.0, 0.0, owner});
    if (tcc - 1.0 < 1.0) continue;  // deadline reached, the ESU leaves
    const double used = rng.uniform(sc.consumption_kw - sc.consumption_spread_kw,
                                    sc.consumption_kw + sc.consumption_spread_kw);
    b.push_back({quantize_soc(std::max(soc - used, 0.0), sc.resolution), tcc - 1.0, 0.0, 0.0, owner});
  }
  return link_slots(a, b, cfg, rng).probability();
}

DefenseRun evaluate_defense(const DefenseScenario& sc, const AttackConfig& soc_tcc, const AttackConfig& prio,
                            Rng& rng) {
  if (sc.n_esus < 1 || sc.n_subrequests < 1 || sc.slots < 0 || !(sc.battery_kw > 0.0)) {
    throw Error(Errc::invalid_parameters, "defense scenario out of range");
  }
  struct Esu {
    double soc;
    int tcc;
  };
  std::vector<Esu> esus;
  for (int i = 0; i < sc.n_esus; ++i) {
    esus.push_back({rng.uniform01(), static_cast<int>(rng.uniform_int(1, sc.tcc_max))});
  }

  std::vector<Observation> prev;
  double sum_a = 0.0, sum_p = 0.0;
  int pairs = 0;
  for (int slot = 0; slot < sc.slots; ++slot) {
    std::vector<Observation> obs;
    std::vector<coord::Request> reqs;
    for (std::size_t i = 0; i < esus.size(); ++i) {
      const auto& e = esus[i];
      if (e.tcc < 1 || e.soc >= 1.0) continue;
      const double demand = (1.0 - e.soc) * sc.battery_kw;
      const coord::ChargingState state{e.soc, static_cast<double>(e.tcc), demand};
      std::vector<coord::SubRequest> parts;
      if (sc.n_subrequests == 1) {
        parts.push_back({state.soc, state.tcc, coord::priority(state, sc.weights), false});
      } else {
        parts = coord::split_request(state, sc.n_subrequests, sc.weights, sc.split, rng).parts;
      }
      for (const auto& part : parts) {
        const double u = coord::priority(part.soc, part.tcc, sc.weights);
        reqs.push_back({u, demand / sc.n_subrequests});
        obs.push_back({quantize_soc(part.soc * sc.battery_kw, sc.resolution), part.tcc, u, 0.0,
                       static_cast<std::uint32_t>(i)});
      }
    }
    if (obs.empty()) break;
    const auto sched = coord::knapsack_schedule(reqs, sc.capacity_kw);
    std::vector<double> granted(esus.size(), 0.0);
    for (std::size_t k = 0; k < obs.size(); ++k) {
      obs[k].granted_kw = sched.granted_kw[k];
      granted[obs[k].owner] += sched.granted_kw[k];
    }

    if (!prev.empty()) {
      sum_a += link_slots(prev, obs, soc_tcc, rng).probability();
      sum_p += link_slots(prev, obs, prio, rng).probability();
      ++pairs;
    }
    prev = std::move(obs);

    for (std::size_t i = 0; i < esus.size(); ++i) {
      auto& e = esus[i];
      if (e.tcc < 1 || e.soc >= 1.0) continue;
      if (granted[i] > 0.0) {
        e.soc = std::min(1.0, e.soc + granted[i] / sc.battery_kw);
      } else {
        const double used = rng.uniform(sc.consumption_kw - sc.consumption_spread_kw,
                                        sc.consumption_kw + sc.consumption_spread_kw);
        e.soc = std::max(0.0, e.soc - used / sc.battery_kw);
      }
      if (e.soc > 1.0 - 1e-12) e.soc = 1.0;
      e.tcc -= 1;
    }
  }
  if (pairs == 0) return {};
  return {sum_a / pairs, sum_p / pairs};
}

}  // namespace ppcc::attack
