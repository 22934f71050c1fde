#include "ppcc/coord/schedule.hpp"

#include <algorithm>
#include <numeric>

#include "ppcc/common/error.hpp"

namespace ppcc::coord {

namespace {

constexpr double kEps = 1e-9;

Schedule empty_schedule(std::size_t n, double capacity_kw) {
  if (!(capacity_kw >= 0.0)) throw Error(Errc::invalid_argument, "capacity must be nonnegative");
  return {std::vector<GrantKind>(n, GrantKind::none), std::vector<double>(n, 0.0), capacity_kw, 0.0};
}

void check_requests(std::span<const Request> reqs) {
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    if (!(reqs[i].demand_kw > 0.0)) {
      throw Error(Errc::invalid_argument, "demand must be positive", static_cast<long>(i));
    }
  }
}

std::vector<std::size_t> density_order(std::span<const Request> reqs) {
  std::vector<std::size_t> order(reqs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return reqs[a].priority / reqs[a].demand_kw > reqs[b].priority / reqs[b].demand_kw;
  });
  return order;
}

void grant(Schedule& s, std::size_t i, double kw, GrantKind kind) {
  s.kind[i] = kind;
  s.granted_kw[i] = kw;
  s.total_kw += kw;
}

Schedule greedy_full(std::span<const Request> reqs, double capacity_kw) {
  check_requests(reqs);
  Schedule s = empty_schedule(reqs.size(), capacity_kw);
  double residual = capacity_kw;
  for (std::size_t i : density_order(reqs)) {
    if (reqs[i].demand_kw <= residual) {
      grant(s, i, reqs[i].demand_kw, GrantKind::full);
      residual -= reqs[i].demand_kw;
    }
  }
  return s;
}

}  // namespace

double Schedule::total_priority(std::span<const Request> reqs) const {
  double u = 0.0;
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    if (kind[i] != GrantKind::none) u += reqs[i].priority;
  }
  return u;
}

Schedule greedy_schedule(std::span<const Request> reqs, double capacity_kw) { return greedy_full(reqs, capacity_kw); }

Schedule knapsack_schedule(std::span<const Request> reqs, double capacity_kw) {
  Schedule s = greedy_full(reqs, capacity_kw);
  const double residual = capacity_kw - s.total_kw;
  if (residual <= 0.0) return s;
  std::size_t best = reqs.size();
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    if (s.kind[i] != GrantKind::none) continue;
    if (best == reqs.size() || reqs[i].priority > reqs[best].priority) best = i;
  }
  if (best != reqs.size()) grant(s, best, residual, GrantKind::partial);
  return s;
}

Schedule fcfs_schedule(std::span<const Request> reqs, double capacity_kw) {
  check_requests(reqs);
  Schedule s = empty_schedule(reqs.size(), capacity_kw);
  double residual = capacity_kw;
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    if (reqs[i].demand_kw > residual) break;
    grant(s, i, reqs[i].demand_kw, GrantKind::full);
    residual -= reqs[i].demand_kw;
  }
  return s;
}

Schedule brute_force_ip(std::span<const Request> reqs, double capacity_kw) {
  if (reqs.size() > 20) throw Error(Errc::instance_too_large, "brute force limited to 20 requests");
  check_requests(reqs);
  Schedule best = empty_schedule(reqs.size(), capacity_kw);
  double best_u = 0.0;
  const std::uint32_t limit = 1u << reqs.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    double p = 0.0, u = 0.0;
    for (std::size_t i = 0; i < reqs.size(); ++i) {
      if (mask & (1u << i)) {
        p += reqs[i].demand_kw;
        u += reqs[i].priority;
      }
    }
    if (p <= capacity_kw && u > best_u) {
      best_u = u;
      best = empty_schedule(reqs.size(), capacity_kw);
      for (std::size_t i = 0; i < reqs.size(); ++i) {
        if (mask & (1u << i)) grant(best, i, reqs[i].demand_kw, GrantKind::full);
      }
    }
  }
  return best;
}

int charging_index(std::span<const ChargeRecord> records) {
  int count = 0;
  for (const auto& r : records) {
    if (r.expired && r.granted_kw + kEps < r.demand_kw) ++count;
  }
  return count;
}

}  // namespace ppcc::coord
