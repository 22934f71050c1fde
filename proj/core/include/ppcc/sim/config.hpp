#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ppcc/coord/priority.hpp"
#include "ppcc/dcc/levels.hpp"

namespace ppcc::sim {

enum class Scheme { ccc, dcc, fcfs };

std::string_view scheme_name(Scheme s);

/// One simulated community. SoC is drawn in kW and divided by the battery
/// size; TCC is drawn in whole slots.
struct SimConfig {
  Scheme scheme = Scheme::ccc;
  int n_esus = 40;
  int slots = 30;
  double capacity_kw = 1000.0;
  double battery_kw = 100.0;
  double soc_min_kw = 1.0;
  double soc_max_kw = 100.0;
  int tcc_min = 1;
  int tcc_max = 48;
  // Drawn for every ESU that got nothing in a slot.
  double consumption_kw = 0.0;
  double consumption_spread_kw = 0.0;
  coord::WeightConfig weights;
  int n_subrequests = 1;
  double spread = 0.05;
  dcc::LevelLayout layout;
  bool crypto = false;
  unsigned pairing_bits = 224;
  unsigned paillier_bits = 1024;
  int dcc_nodes = 1;
  int proxies = 2;
  std::uint64_t seed = 1;

  /// Throws config_invalid.
  void validate() const;

  /// Canonical key=value text; parse_config(to_text()) gives back this config.
  std::string to_text() const;
  /// sha256 of to_text(), hex.
  std::string digest() const;
};

/// Reads `key = value` lines; '#' starts a comment. Keys not listed in
/// to_text() and malformed values throw config_invalid. Keys left out keep
/// their defaults. The result is validated.
SimConfig parse_config(std::string_view text);
SimConfig load_config(const std::string& path);

}  // namespace ppcc::sim
