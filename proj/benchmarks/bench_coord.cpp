#include <benchmark/benchmark.h>

#include "ppcc/common/rng.hpp"
#include "ppcc/coord/schedule.hpp"
#include "ppcc/coord/split.hpp"
#include "ppcc/coord/truncnorm.hpp"
#include "ppcc/dcc/levels.hpp"

namespace {

using namespace ppcc;

std::vector<coord::Request> requests(int n) {
  Rng rng(1);
  std::vector<coord::Request> r;
  for (int i = 0; i < n; ++i) r.push_back({rng.uniform01(), static_cast<double>(rng.uniform_int(1, 100))});
  return r;
}

void BM_Knapsack(benchmark::State& state) {
  const auto reqs = requests(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coord::knapsack_schedule(reqs, 25.0 * state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Knapsack)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNLogN);

void BM_Fcfs(benchmark::State& state) {
  const auto reqs = requests(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coord::fcfs_schedule(reqs, 25.0 * state.range(0)));
}
BENCHMARK(BM_Fcfs)->Arg(256)->Arg(4096);

void BM_TruncNormSample(benchmark::State& state) {
  Rng rng(2);
  const coord::TruncNormParams p{0.4, 0.05, 0.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(coord::sample_truncnorm(p, rng));
}
BENCHMARK(BM_TruncNormSample);

void BM_SplitRequest(benchmark::State& state) {
  Rng rng(3);
  const coord::ChargingState s{0.4, 10.0, 60.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coord::split_request(s, static_cast<int>(state.range(0)), {}, {}, rng));
  }
}
BENCHMARK(BM_SplitRequest)->Arg(1)->Arg(5)->Arg(20);

void BM_LevelThreshold(benchmark::State& state) {
  Rng rng(4);
  dcc::LevelVector totals;
  for (int i = 0; i < 10; ++i) totals.push_back(rng.uniform_int(0, 400));
  for (auto _ : state) benchmark::DoNotOptimize(dcc::find_threshold(totals, 1000));
}
BENCHMARK(BM_LevelThreshold);

}  // namespace

BENCHMARK_MAIN();
