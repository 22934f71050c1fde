#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ppcc::coord {

struct Request {
  double priority = 0.0;
  double demand_kw = 0.0;
};

enum class GrantKind : std::uint8_t { none = 0, full = 1, partial = 2 };

/// Per-request decision, indexed like the input.
struct Schedule {
  std::vector<GrantKind> kind;
  std::vector<double> granted_kw;
  double capacity_kw = 0.0;
  double total_kw = 0.0;

  double total_priority(std::span<const Request> reqs) const;
};

/// Greedy knapsack: density U/P descending (stable, lower index on ties),
/// full grants whenever the demand fits the residual, then the residual goes
/// to the highest-priority request left out.
Schedule knapsack_schedule(std::span<const Request> reqs, double capacity_kw);

/// Same ordering and full grants, without the fractional top-up.
Schedule greedy_schedule(std::span<const Request> reqs, double capacity_kw);

/// Arrival order, full grants only, stopping at the first request that does
/// not fit.
Schedule fcfs_schedule(std::span<const Request> reqs, double capacity_kw);

/// Exact 0/1 optimum of sum U subject to sum P <= C by enumeration. Test
/// oracle; throws instance_too_large above 20 requests.
Schedule brute_force_ip(std::span<const Request> reqs, double capacity_kw);

/// Outcome of one ESU over a whole simulation.
struct ChargeRecord {
  double demand_kw = 0.0;
  double granted_kw = 0.0;
  bool expired = false;  // TCC ran out while still waiting
};

/// ESUs whose deadline passed before their demand was met.
int charging_index(std::span<const ChargeRecord> records);

}  // namespace ppcc::coord
