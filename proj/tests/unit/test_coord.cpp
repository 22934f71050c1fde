#include "support.hpp"

#include <algorithm>
#include <cmath>

#include "ppcc/common/rng.hpp"
#include "ppcc/coord/priority.hpp"
#include "ppcc/coord/schedule.hpp"
#include "ppcc/coord/split.hpp"
#include "ppcc/coord/truncnorm.hpp"

namespace ppcc::coord {
namespace {

// Truncated-normal CDF straight from erfc, independent of the library's
// quantile machinery.
double reference_cdf(double x, const TruncNormParams& p) {
  const auto phi = [&](double v) { return 0.5 * std::erfc(-(v - p.mean) / (p.sd * std::sqrt(2.0))); };
  if (x <= p.lo) return 0.0;
  if (x >= p.hi) return 1.0;
  return (phi(x) - phi(p.lo)) / (phi(p.hi) - phi(p.lo));
}

double ks_statistic(std::vector<double> xs, const TruncNormParams& p) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = reference_cdf(xs[i], p);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

TEST(Priority, TccFunction) {
  EXPECT_EQ(f_tcc(1), 1.0);
  EXPECT_EQ(f_tcc(2), 0.5);
  EXPECT_NEAR(f_tcc(48), 0.0208, 1e-4);
  EXPECT_DOUBLE_EQ(f_tcc_inverse(f_tcc(7.5)), 7.5);
  test::expect_errc(Errc::invalid_argument, [] { f_tcc(0.5); });
}

TEST(Priority, Examples) {
  const WeightConfig w;
  EXPECT_NEAR(priority(1.0, 1e12, w), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(priority(0.0, 1.0, w), 1.0);
  EXPECT_DOUBLE_EQ(priority(0.5, 2.0, w), 0.5);
  test::expect_errc(Errc::invalid_argument, [] { WeightConfig{0.5, 0.6}.validate(); });
  test::expect_errc(Errc::invalid_argument, [] { ChargingState{1.5, 1, 1}.validate(); });
}

TEST(TruncNorm, CdfBoundariesSymmetryAndOracle) {
  const TruncNormParams p{0.4, 0.2, 0.0, 1.0};
  EXPECT_EQ(truncnorm_cdf(0.0, p), 0.0);
  EXPECT_EQ(truncnorm_cdf(1.0, p), 1.0);
  EXPECT_NEAR(truncnorm_cdf(0.5, {0.5, 0.3, 0.0, 1.0}), 0.5, 1e-15);
  for (double x = 0.0; x <= 1.0; x += 0.01) EXPECT_NEAR(truncnorm_cdf(x, p), reference_cdf(x, p), 1e-12);
}

TEST(TruncNorm, PdfIntegratesToOne) {
  for (const TruncNormParams p : {TruncNormParams{0.2, 0.4, 0, 1}, TruncNormParams{0.4, 0.05, 0, 1},
                                  TruncNormParams{0.9, 0.85, 0, 1}, TruncNormParams{-1.0, 0.2, 0, 1}}) {
    // Composite Simpson.
    constexpr int kN = 20'000;
    const double h = (p.hi - p.lo) / kN;
    double s = truncnorm_pdf(p.lo, p) + truncnorm_pdf(p.hi, p);
    for (int i = 1; i < kN; ++i) s += (i % 2 ? 4 : 2) * truncnorm_pdf(p.lo + i * h, p);
    EXPECT_NEAR(s * h / 3.0, 1.0, 1e-6) << p.mean << " " << p.sd;
  }
}

TEST(TruncNorm, QuantileInvertsCdf) {
  const TruncNormParams p{0.5, 0.05, 0.0, 1.0};
  EXPECT_EQ(truncnorm_quantile(0.0, p), 0.0);
  EXPECT_EQ(truncnorm_quantile(1.0, p), 1.0);
  EXPECT_NEAR(truncnorm_quantile(0.5, p), 0.5, 1e-12);
  for (const TruncNormParams q : {p, TruncNormParams{0.2, 0.4, 0, 1}, TruncNormParams{-2.0, 0.3, 0, 1}}) {
    for (double u = 0.05; u < 1.0; u += 0.05) EXPECT_NEAR(truncnorm_cdf(truncnorm_quantile(u, q), q), u, 1e-9);
  }
}

TEST(TruncNorm, SamplesMatchCdf) {
  Rng rng(1);
  for (const TruncNormParams p : {TruncNormParams{0.4, 0.05, 0, 1}, TruncNormParams{0.2, 0.4, 0, 1},
                                  TruncNormParams{1.5, 0.1, 0, 1}}) {
    std::vector<double> xs;
    for (int i = 0; i < 10'000; ++i) {
      xs.push_back(sample_truncnorm(p, rng));
      ASSERT_GE(xs.back(), p.lo);
      ASSERT_LE(xs.back(), p.hi);
    }
    EXPECT_LT(ks_statistic(xs, p), 0.02) << p.mean << " " << p.sd;
  }
}

TEST(Split, SingleTightSplitIsTheParent) {
  Rng rng(2);
  const WeightConfig w;
  const ChargingState s{0.3, 5.0, 70.0};
  const auto r = split_request(s, 1, w, {1e-9, 48, 16}, rng);
  ASSERT_EQ(r.parts.size(), 1u);
  EXPECT_EQ(r.parts[0].soc, s.soc);
  EXPECT_NEAR(r.parts[0].tcc, s.tcc, 1e-5);
  EXPECT_NEAR(r.parts[0].priority, priority(s, w), 1e-8);
}

TEST(Split, SocSharesCloseExactly) {
  Rng rng(3);
  const WeightConfig w;
  for (int trial = 0; trial < 2000; ++trial) {
    const ChargingState s{rng.uniform01(), static_cast<double>(rng.uniform_int(1, 48)), 10.0};
    const int n = static_cast<int>(rng.uniform_int(1, 6));
    auto parts = split_request(s, n, w, {}, rng).parts;
    double fwd = 0.0, back = 0.0;
    for (const auto& p : parts) {
      EXPECT_GE(p.soc, 0.0);
      fwd += p.soc;
    }
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) back += it->soc;
    EXPECT_EQ(fwd, s.soc);
    EXPECT_EQ(back, s.soc);
  }
}

TEST(Split, PartsReproduceTheirPriority) {
  Rng rng(4);
  const WeightConfig w;
  const ChargingState s{0.35, 12.0, 65.0};
  const auto r = split_request(s, 5, w, {}, rng);
  int clamped = 0;
  for (const auto& p : r.parts) {
    EXPECT_GE(p.tcc, 1.0);
    if (p.clamped) {
      ++clamped;
      continue;
    }
    EXPECT_NEAR(priority(p.soc, p.tcc, w), p.priority, 1e-9);
  }
  EXPECT_EQ(clamped, r.clamped_count);
}

TEST(Split, PrioritiesConcentrateAsSpreadShrinks) {
  // For a normal sampler P(|dev| > 3s) is 0.27%, so out of 1000 draws a few
  // are expected beyond 3s; the tail fraction is checked against that rate
  // and the maximum against 5s. At s = 0.1 small SoC shares only accept high
  // draws, and the resampling fattens the tail, so the rate check starts at
  // s = 0.01.
  const WeightConfig w;
  const ChargingState s{0.5, 4.0, 50.0};
  const double u0 = priority(s, w);
  double prev_max = 1.0;
  for (const double spread : {0.1, 0.01, 0.001}) {
    Rng rng(5);
    double max_dev = 0.0;
    int beyond = 0, total = 0;
    for (int i = 0; i < 200; ++i) {
      for (const auto& p : split_request(s, 5, w, {spread, 48, 16}, rng).parts) {
        const double d = std::abs(p.priority - u0);
        max_dev = std::max(max_dev, d);
        beyond += d > 3 * spread;
        ++total;
      }
    }
    EXPECT_LT(max_dev, 5 * spread) << spread;
    if (spread <= 0.01) {
      EXPECT_LE(static_cast<double>(beyond) / total, 0.0027 + 3 * std::sqrt(0.0027 / total)) << spread;
    }
    EXPECT_LT(max_dev, prev_max);
    prev_max = max_dev;
  }
}

TEST(Split, ZeroTccWeight) {
  Rng rng(6);
  const WeightConfig w{1.0, 0.0};
  for (const auto& p : split_request({0.4, 3, 60}, 3, w, {}, rng).parts) {
    EXPECT_EQ(p.priority, 1.0 - p.soc);
    EXPECT_FALSE(p.clamped);
  }
}

TEST(Split, Errors) {
  Rng rng(7);
  test::expect_errc(Errc::invalid_argument, [&] { split_request({0.4, 3, 60}, 0, {}, {}, rng); });
  test::expect_errc(Errc::invalid_argument, [&] { split_request({0.4, 0.5, 60}, 2, {}, {}, rng); });
}

// The worked example population: priority and demand per ESU 1..10.
std::vector<Request> table1() {
  return {{0.333, 10}, {0.250, 30}, {1.0, 50}, {0.166, 60}, {0.333, 90},
          {0.143, 20}, {0.143, 5},  {0.5, 40}, {1.0, 20},   {0.200, 70}};
}

TEST(Knapsack, WorkedExampleTrace) {
  const auto reqs = table1();
  const auto s = knapsack_schedule(reqs, 300);
  // ESUs 9,1,7,3,8,2,6,5 in full, then 35 kW to ESU 10 (0.200 > 0.166).
  const std::vector<double> expect = {10, 30, 50, 0, 90, 20, 5, 40, 20, 35};
  EXPECT_EQ(s.granted_kw, expect);
  EXPECT_EQ(s.kind[9], GrantKind::partial);
  EXPECT_EQ(s.kind[3], GrantKind::none);
  EXPECT_EQ(s.total_kw, 300);
}

TEST(Knapsack, AbundantCapacityAndTies) {
  const auto reqs = table1();
  const auto s = knapsack_schedule(reqs, 1000);
  for (std::size_t i = 0; i < reqs.size(); ++i) EXPECT_EQ(s.granted_kw[i], reqs[i].demand_kw);
  // Equal density: the lower index goes first.
  const std::vector<Request> tie = {{0.5, 10}, {0.5, 10}};
  const auto t = knapsack_schedule(tie, 15);
  EXPECT_EQ(t.kind[0], GrantKind::full);
  EXPECT_EQ(t.kind[1], GrantKind::partial);
  EXPECT_EQ(t.granted_kw[1], 5);
  const auto gs = greedy_schedule(tie, 15);
  EXPECT_EQ(gs.kind[1], GrantKind::none);
}

TEST(Fcfs, HeadOfLine) {
  const std::vector<Request> reqs = {{0.1, 600}, {0.9, 600}, {0.9, 100}};
  const auto s = fcfs_schedule(reqs, 1000);
  EXPECT_EQ(s.granted_kw, (std::vector<double>{600, 0, 0}));
  const auto all = fcfs_schedule(reqs, 5000);
  EXPECT_EQ(all.total_kw, 1300);
}

TEST(BruteForce, SmallCases) {
  const std::vector<Request> one = {{0.4, 10}};
  EXPECT_EQ(brute_force_ip(one, 10).kind[0], GrantKind::full);
  const std::vector<Request> excl = {{0.4, 10}, {0.6, 10}};
  const auto s = brute_force_ip(excl, 15);
  EXPECT_EQ(s.kind[0], GrantKind::none);
  EXPECT_EQ(s.kind[1], GrantKind::full);
  test::expect_errc(Errc::instance_too_large, [] { brute_force_ip(std::vector<Request>(21, {0.1, 1}), 10); });
}

TEST(Schedules, InputErrors) {
  const std::vector<Request> bad = {{0.5, 0}};
  test::expect_errc(Errc::invalid_argument, [&] { knapsack_schedule(bad, 10); });
  test::expect_errc(Errc::invalid_argument, [&] { fcfs_schedule(table1(), -1); });
  EXPECT_EQ(knapsack_schedule({}, 10).total_kw, 0.0);
}

std::vector<Request> random_instance(Rng& rng, int n) {
  std::vector<Request> r;
  for (int i = 0; i < n; ++i) r.push_back({rng.uniform01(), rng.uniform(1.0, 100.0)});
  return r;
}

TEST(Schedules, FeasibleAndDensityPrefix) {
  Rng rng(8);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto reqs = random_instance(rng, static_cast<int>(rng.uniform_int(1, 30)));
    const double cap = rng.uniform(0.0, 1500.0);
    const auto k = knapsack_schedule(reqs, cap);
    const auto f = fcfs_schedule(reqs, cap);
    double sum = 0.0;
    for (double x : k.granted_kw) sum += x;
    ASSERT_LE(sum, cap + 1e-9);
    ASSERT_LE(f.total_kw, cap + 1e-9);

    // Walk in density order: every full grant either extends the prefix or
    // follows an item that did not fit the residual at its turn.
    std::vector<std::size_t> order(reqs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
      return reqs[a].priority / reqs[a].demand_kw > reqs[b].priority / reqs[b].demand_kw;
    });
    double residual = cap;
    for (auto i : order) {
      if (k.kind[i] == GrantKind::full) {
        residual -= reqs[i].demand_kw;
      } else {
        ASSERT_GT(reqs[i].demand_kw, residual) << "trial " << trial;
      }
    }
  }
}

TEST(Schedules, FractionalFillUsesAllCapacity) {
  Rng rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto reqs = random_instance(rng, 20);
    double total = 0.0;
    for (const auto& r : reqs) total += r.demand_kw;
    const double cap = rng.uniform(0.0, total);
    EXPECT_NEAR(knapsack_schedule(reqs, cap).total_kw, cap, 1e-9);
  }
}

TEST(Schedules, GreedyWithinHalfOfOptimum) {
  Rng rng(10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto reqs = random_instance(rng, 12);
    const double cap = rng.uniform(50.0, 600.0);
    const double opt = brute_force_ip(reqs, cap).total_priority(reqs);
    EXPECT_GE(greedy_schedule(reqs, cap).total_priority(reqs), 0.5 * opt - 1e-12) << trial;
  }
}

TEST(Schedules, KnapsackServesAtLeastFcfsPriority) {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto reqs = random_instance(rng, 30);
    EXPECT_GE(knapsack_schedule(reqs, 800).total_priority(reqs), fcfs_schedule(reqs, 800).total_priority(reqs) - 1e-12)
        << trial;
  }
}

TEST(ChargingIndex, CountsExpiredUnfulfilled) {
  const std::vector<ChargeRecord> ok = {{10, 10, false}, {5, 5, true}};
  EXPECT_EQ(charging_index(ok), 0);
  const std::vector<ChargeRecord> one = {{10, 10, false}, {20, 0, true}};
  EXPECT_EQ(charging_index(one), 1);
}

}  // namespace
}  // namespace ppcc::coord
