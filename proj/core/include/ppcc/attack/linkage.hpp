#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ppcc/common/rng.hpp"
#include "ppcc/coord/priority.hpp"
#include "ppcc/coord/split.hpp"

namespace ppcc::attack {

enum class AttackKind { soc, tcc, both, priority };
enum class Resolution { low, high };

std::string_view attack_name(AttackKind k);
std::string_view resolution_name(Resolution r);

/// What the attacker sees of one request, plus the ground-truth owner the
/// simulator keeps for scoring.
struct Observation {
  double soc_kw = 0.0;
  double tcc = 1.0;
  double priority = 0.0;
  double granted_kw = 0.0;  // known to the CC, which issued the grant
  std::uint32_t owner = 0;
};

struct AttackConfig {
  AttackKind kind = AttackKind::both;
  double threshold = 2.0;           // kW for SoC, slots for TCC, Euclidean for both
  double priority_threshold = 0.05;
  double soc_weight = 1.0;
  double tcc_weight = 1.0;
  double expected_consumption_kw = 2.0;

  void validate() const;
};

struct LinkageResult {
  int linked = 0;
  int total = 0;
  double probability() const { return total == 0 ? 0.0 : static_cast<double>(linked) / total; }
};

/// Reported SoC rounded to 1 kW (low) or 0.1 kW (high).
double quantize_soc(double kw, Resolution r);

/// One-to-one greedy matching: the attacker predicts each slot-j request
/// forward (SoC + grant if granted, else SoC - expected consumption; TCC - 1), then takes
/// candidate pairs below the threshold in increasing distance, ties broken
/// at random. A pair counts when both requests have the same owner.
LinkageResult link_slots(const std::vector<Observation>& slot_j, const std::vector<Observation>& slot_j1,
                         const AttackConfig& cfg, Rng& rng);

/// Two consecutive slots of an unprotected community: SoC uniform in
/// [soc_min, soc_max] kW, TCC uniform in {1..tcc_max}, then one slot of
/// consumption uniform in expected +- spread and TCC - 1.
struct BaselineScenario {
  int n_esus = 20;
  double soc_min_kw = 1.0;
  double soc_max_kw = 50.0;
  int tcc_max = 48;
  double consumption_kw = 2.0;
  double consumption_spread_kw = 0.5;
  Resolution resolution = Resolution::low;
};

double baseline_success(const BaselineScenario& sc, const AttackConfig& cfg, Rng& rng);

/// Community running the plaintext CCC schedule with every request split
/// into n sub-requests. n = 1 submits the true (S, T) unchanged.
struct DefenseScenario {
  int n_esus = 80;
  int n_subrequests = 1;
  int slots = 30;
  double capacity_kw = 1000.0;
  double battery_kw = 100.0;
  int tcc_max = 48;
  double consumption_kw = 2.0;
  double consumption_spread_kw = 0.5;
  Resolution resolution = Resolution::high;
  coord::WeightConfig weights;
  coord::SplitConfig split;
};

struct DefenseRun {
  double soc_tcc_success = 0.0;   // mean over consecutive slot pairs
  double priority_success = 0.0;
};

DefenseRun evaluate_defense(const DefenseScenario& sc, const AttackConfig& soc_tcc, const AttackConfig& prio,
                            Rng& rng);

}  // namespace ppcc::attack
