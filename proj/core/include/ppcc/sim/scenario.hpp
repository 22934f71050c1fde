#pragma once

#include <cstddef>
#include <vector>

#include "ppcc/coord/schedule.hpp"
#include "ppcc/dcc/levels.hpp"
#include "ppcc/sim/config.hpp"
#include "ppcc/sim/report.hpp"

namespace ppcc::sim {

struct SlotRecord {
  int slot = 0;
  int active = 0;     // ESUs still waiting at the start of the slot
  int requests = 0;   // sub-requests in CCC, one per ESU otherwise
  double granted_kw = 0.0;
  int charged_full = 0;  // ESUs that reached a full battery this slot
  int expired = 0;       // ESUs whose deadline passed this slot
  std::size_t messages = 0;
  std::size_t bytes = 0;  // serialized frames; crypto mode only
};

struct SimOutcome {
  std::vector<SlotRecord> slots;
  std::vector<std::vector<double>> grants;      // per slot, per request, in submission order
  std::vector<dcc::LevelVector> level_totals;   // per slot, DCC only
  std::vector<coord::ChargeRecord> records;     // per ESU
  int charging_index = 0;
  int clamped = 0;  // sub-requests whose TCC had to be clamped
};

/// Steps the configured scheme slot by slot. Granted energy raises SoC by
/// p / battery, every slot lowers TCC by one, and an ESU leaves once full or
/// once its TCC reaches zero, the latter counting toward the charging index.
/// The simulation draws from Rng(seed); crypto mode runs every protocol
/// message through the real primitives on a separate stream, so both modes
/// produce the same schedules. Throws config_invalid.
SimOutcome simulate(const SimConfig& cfg);

/// simulate() plus the per-slot table.
CsvReport run_scenario(const SimConfig& cfg);

}  // namespace ppcc::sim
