#include <benchmark/benchmark.h>

#include "ppcc/common/rng.hpp"
#include "ppcc/paillier/paillier.hpp"
#include "ppcc/pairing/pbs.hpp"
#include "ppcc/pairing/plain_sig.hpp"

namespace {

using namespace ppcc;
using namespace ppcc::pairing;

const CommonInfo kC{20'000, 1};

void BM_Pairing(benchmark::State& state) {
  const auto g = setup_pairing(static_cast<unsigned>(state.range(0)));
  Rng rng(1);
  const auto a = g->random_point(rng), b = g->random_point(rng);
  for (auto _ : state) benchmark::DoNotOptimize(g->pair(a, b));
}
BENCHMARK(BM_Pairing)->Arg(160)->Arg(224)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_ScalarMul(benchmark::State& state) {
  const auto g = setup_pairing(224);
  Rng rng(2);
  const auto p = g->random_point(rng);
  const mpz_class k = rng.below(g->order());
  for (auto _ : state) benchmark::DoNotOptimize(g->mul(k, p));
}
BENCHMARK(BM_ScalarMul)->Unit(benchmark::kMicrosecond);

void BM_PbsIssue(benchmark::State& state) {
  const auto g = setup_pairing(224);
  Rng rng(3);
  const auto key = PbsKeyPair::generate(*g, rng);
  const Bytes m = rng.bytes(32);
  for (auto _ : state) {
    const auto b = blind(*g, m, kC, key.p_pub, rng);
    benchmark::DoNotOptimize(unblind(*g, pbs_sign(*g, b.point, kC, key), b.state));
  }
}
BENCHMARK(BM_PbsIssue)->Unit(benchmark::kMillisecond);

void BM_PbsVerify(benchmark::State& state) {
  const auto g = setup_pairing(224);
  Rng rng(4);
  const auto key = PbsKeyPair::generate(*g, rng);
  const Bytes m = rng.bytes(32);
  const auto b = blind(*g, m, kC, key.p_pub, rng);
  const auto sig = unblind(*g, pbs_sign(*g, b.point, kC, key), b.state);
  for (auto _ : state) benchmark::DoNotOptimize(pbs_verify(*g, m, kC, sig, key.p_pub));
}
BENCHMARK(BM_PbsVerify)->Unit(benchmark::kMillisecond);

// Aggregate check of N tokens against N individual checks.
void BM_PbsAggregateVerify(benchmark::State& state) {
  const auto g = setup_pairing(224);
  Rng rng(5);
  const auto key = PbsKeyPair::generate(*g, rng);
  std::vector<Bytes> msgs;
  std::vector<PbsSignature> sigs;
  for (int i = 0; i < state.range(0); ++i) {
    msgs.push_back(rng.bytes(32));
    const auto b = blind(*g, msgs.back(), kC, key.p_pub, rng);
    sigs.push_back(unblind(*g, pbs_sign(*g, b.point, kC, key), b.state));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_aggregate(*g, msgs, kC, aggregate_signatures(*g, sigs), key.p_pub));
  }
}
BENCHMARK(BM_PbsAggregateVerify)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_PlainBatchVerify(benchmark::State& state) {
  const auto g = setup_pairing(224);
  Rng rng(6);
  std::vector<BatchEntry> batch;
  for (int i = 0; i < state.range(0); ++i) {
    const auto k = PlainKeyPair::generate(*g, rng);
    Bytes m = rng.bytes(32);
    const auto sig = sign_plain(*g, m, k);
    batch.push_back({k.y, std::move(m), sig});
  }
  for (auto _ : state) benchmark::DoNotOptimize(batch_verify(*g, batch));
}
BENCHMARK(BM_PlainBatchVerify)->Arg(1)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

const paillier::KeyPair& paillier_key() {
  static const auto k = [] {
    Rng rng(7);
    return paillier::keygen(2048, rng);
  }();
  return k;
}

void BM_PaillierEncrypt(benchmark::State& state) {
  const auto& k = paillier_key();
  Rng rng(8);
  const mpz_class m = rng.below(k.pk.n);
  for (auto _ : state) benchmark::DoNotOptimize(paillier::encrypt(m, k.pk, rng));
}
BENCHMARK(BM_PaillierEncrypt)->Unit(benchmark::kMillisecond);

void BM_PaillierDecrypt(benchmark::State& state) {
  const auto& k = paillier_key();
  Rng rng(9);
  const auto c = paillier::encrypt(rng.below(k.pk.n), k.pk, rng);
  for (auto _ : state) benchmark::DoNotOptimize(paillier::decrypt(c, k));
}
BENCHMARK(BM_PaillierDecrypt)->Unit(benchmark::kMillisecond);

void BM_MaskedAggregate(benchmark::State& state) {
  const auto& k = paillier_key();
  const auto r = paillier::derive_slot_randomizer({1, 1}, k.pk);
  std::vector<paillier::MaskedCiphertext> cts;
  for (int i = 0; i < state.range(0); ++i) cts.push_back(paillier::masked_encrypt(i, r, 0, k.pk));
  for (auto _ : state) benchmark::DoNotOptimize(paillier::aggregate_and_decrypt(cts, k));
}
BENCHMARK(BM_MaskedAggregate)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
