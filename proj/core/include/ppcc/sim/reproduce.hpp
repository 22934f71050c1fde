#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppcc/sim/report.hpp"

namespace ppcc::sim {

struct ReproduceOptions {
  std::uint64_t seed = 1;
  int runs = 100;
};

/// fig4, fig5, fig7a, fig7b, fig9a, fig9b, fig10, table3.
const std::vector<std::string>& experiment_ids();

/// Regenerates the data behind one figure or table. Throws
/// unknown_identifier.
CsvReport reproduce(std::string_view id, const ReproduceOptions& opts = {});

/// Seed for run `run` of a sweep point, shared by every scheme compared at
/// that point so the comparisons are paired.
std::uint64_t run_seed(std::uint64_t base, std::uint64_t point, std::uint64_t run);

}  // namespace ppcc::sim
