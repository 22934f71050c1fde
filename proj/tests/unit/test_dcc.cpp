#include "support.hpp"

#include <cmath>

#include "ppcc/common/rng.hpp"
#include "ppcc/dcc/levels.hpp"
#include "ppcc/paillier/paillier.hpp"

namespace ppcc::dcc {
namespace {

struct Esu {
  std::uint64_t demand;
  double priority;
};

// The worked example: ten ESUs, 300 kW.
const std::vector<Esu> kExample = {{10, 0.333}, {30, 0.250}, {50, 1.0},  {60, 0.166}, {90, 0.333},
                                   {20, 0.143}, {5, 0.143},  {40, 0.5},  {20, 1.0},   {70, 0.200}};

LevelVector plain_totals(const std::vector<Esu>& esus, const LevelLayout& l) {
  LevelVector t(static_cast<std::size_t>(l.levels));
  for (const auto& e : esus) t[static_cast<std::size_t>(level_of(e.priority, l) - 1)] += e.demand;
  return t;
}

TEST(Levels, LevelOf) {
  const LevelLayout l;
  EXPECT_EQ(level_of(0.333, l), 4);
  EXPECT_EQ(level_of(0.250, l), 3);
  EXPECT_EQ(level_of(0.0, l), 1);
  EXPECT_EQ(level_of(1.0, l), 10);
  EXPECT_EQ(level_of(0.0999, l), 1);
  EXPECT_EQ(level_of(0.1, l), 2);
  test::expect_errc(Errc::invalid_argument, [&] { level_of(1.5, l); });
}

TEST(Levels, EncodePlacesDemandInItsSlot) {
  const LevelLayout l;
  EXPECT_EQ(encode_request(50, 1.0, l), mpz_class(50) << 900);
  EXPECT_EQ(encode_request(0, 0.7, l), 0);
  EXPECT_EQ(encode_request(5, 0.05, l), 5);
  test::expect_errc(Errc::demand_overflow, [] { encode_request(256, 0.5, {10, 8}); });
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const auto p = static_cast<std::uint64_t>(rng.uniform_int(1, 1'000'000));
    const double u = rng.uniform01();
    const auto v = decode_total(encode_request(p, u, l), l);
    for (int lv = 1; lv <= l.levels; ++lv) {
      EXPECT_EQ(v[static_cast<std::size_t>(lv - 1)], lv == level_of(u, l) ? mpz_class(p) : mpz_class(0));
    }
  }
}

TEST(Levels, ExampleColumnSums) {
  const LevelLayout l;
  mpz_class sum = 0;
  for (const auto& e : kExample) sum += encode_request(e.demand, e.priority, l);
  const auto v = decode_total(sum, l);
  const std::vector<int> expect = {0, 85, 100, 100, 0, 40, 0, 0, 0, 70};
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(v[i], expect[i]) << "level " << i + 1;
  for (const auto& x : decode_total(0, l)) EXPECT_EQ(x, 0);
}

TEST(Levels, RandomSumsDecodeElementwise) {
  const LevelLayout l{10, 40};
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Esu> esus;
    for (int i = 0; i < 50; ++i) esus.push_back({static_cast<std::uint64_t>(rng.uniform_int(0, 1000)), rng.uniform01()});
    mpz_class sum = 0;
    for (const auto& e : esus) sum += encode_request(e.demand, e.priority, l);
    EXPECT_EQ(decode_total(sum, l), plain_totals(esus, l));
  }
}

TEST(Levels, WorstCaseDoesNotCarry) {
  // n ESUs with 2^(bits - ceil(log2 n)) - 1 kW each all land in one level.
  const LevelLayout l{4, 16};
  for (const int n : {2, 7, 64}) {
    const int shift = static_cast<int>(std::ceil(std::log2(n)));
    const std::uint64_t p = (1ull << (l.bits - static_cast<unsigned>(shift))) - 1;
    for (int lv = 1; lv <= l.levels; ++lv) {
      const double u = (lv - 0.5) / l.levels;
      mpz_class sum = 0;
      for (int i = 0; i < n; ++i) sum += encode_request(p, u, l);
      const auto v = decode_total(sum, l);
      for (int k = 1; k <= l.levels; ++k) {
        EXPECT_EQ(v[static_cast<std::size_t>(k - 1)], k == lv ? mpz_class(p * static_cast<std::uint64_t>(n)) : 0);
      }
    }
  }
}

TEST(Levels, LayoutValidation) {
  EXPECT_NO_THROW((LevelLayout{10, 100}.validate(1023)));
  test::expect_errc(Errc::invalid_argument, [] { LevelLayout{10, 100}.validate(999); });
  test::expect_errc(Errc::invalid_argument, [] { LevelLayout{10, 100}.validate(1023, 64); });
  test::expect_errc(Errc::invalid_argument, [] { LevelLayout{0, 100}.validate(); });
}

TEST(Threshold, WorkedExample) {
  const auto t = find_threshold(plain_totals(kExample, {}), 300);
  EXPECT_EQ(t.boundary, 3);
  EXPECT_EQ(t.full_from, 4);
  EXPECT_EQ(t.slack_kw, 90);
}

TEST(Threshold, EdgeCases) {
  const LevelLayout l;
  const auto zero = find_threshold(LevelVector(10), 300);
  EXPECT_EQ(zero.boundary, 0);
  EXPECT_EQ(zero.full_from, 1);
  EXPECT_EQ(zero.slack_kw, 300);
  const auto all = find_threshold(plain_totals(kExample, l), 1000);
  EXPECT_EQ(all.boundary, 0);
  EXPECT_EQ(all.full_from, 1);
  EXPECT_EQ(all.slack_kw, 605);
  // Top level alone overflows.
  const auto top = find_threshold(plain_totals(kExample, l), 35);
  EXPECT_EQ(top.boundary, 10);
  EXPECT_EQ(top.full_from, 11);
  EXPECT_EQ(top.slack_kw, 35);
}

TEST(Allotment, WorkedExampleGrants) {
  const LevelLayout l;
  const auto totals = plain_totals(kExample, l);
  const auto th = find_threshold(totals, 300);
  const std::vector<double> expect = {10, 27, 50, 0, 90, 0, 0, 40, 20, 63};
  double sum = 0.0;
  for (std::size_t i = 0; i < kExample.size(); ++i) {
    const double e = allotment(static_cast<double>(kExample[i].demand), level_of(kExample[i].priority, l), totals, th);
    EXPECT_EQ(round_centi_kw(e), expect[i]) << "ESU " << i + 1;
    sum += e;
  }
  EXPECT_DOUBLE_EQ(sum, 300);
}

TEST(Allotment, ConservesCapacity) {
  const LevelLayout l;
  Rng rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Esu> esus;
    const int n = static_cast<int>(rng.uniform_int(1, 60));
    double demand = 0.0;
    for (int i = 0; i < n; ++i) {
      esus.push_back({static_cast<std::uint64_t>(rng.uniform_int(1, 100)), rng.uniform01()});
      demand += static_cast<double>(esus.back().demand);
    }
    const double cap = static_cast<double>(rng.uniform_int(0, 3000));
    const auto totals = plain_totals(esus, l);
    const auto th = find_threshold(totals, cap);
    double sum = 0.0;
    for (const auto& e : esus) {
      const double a = allotment(static_cast<double>(e.demand), level_of(e.priority, l), totals, th);
      EXPECT_GE(a, 0.0);
      EXPECT_LE(a, static_cast<double>(e.demand));
      sum += a;
    }
    EXPECT_NEAR(sum, std::min(cap, demand), 1e-9) << trial;
  }
}

TEST(Levels, EncryptedPathMatchesPlainSums) {
  Rng rng(4);
  const auto key = paillier::keygen(1100, rng);
  const LevelLayout l;
  l.validate(key.pk.bits() - 1);
  const auto r = paillier::derive_slot_randomizer({1, 0}, key.pk);
  std::vector<Esu> esus;
  std::vector<paillier::MaskedCiphertext> cts;
  std::vector<mpz_class> masks(20, 0);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const mpz_class s = rng.below(key.pk.n2);
    masks[i] += s;
    masks[(i + 1) % masks.size()] -= s;
  }
  for (std::size_t i = 0; i < masks.size(); ++i) {
    esus.push_back({static_cast<std::uint64_t>(rng.uniform_int(1, 100)), rng.uniform01()});
    cts.push_back(paillier::masked_encrypt(encode_request(esus.back().demand, esus.back().priority, l), r, masks[i],
                                           key.pk));
  }
  EXPECT_EQ(decode_total(paillier::aggregate_and_decrypt(cts, key), l), plain_totals(esus, l));
}

TEST(Rounding, CentiKw) {
  EXPECT_EQ(round_centi_kw(27.000000000000004), 27.0);
  EXPECT_EQ(round_centi_kw(1.005), 1.0);  // 1.005 is stored just below
  EXPECT_EQ(round_centi_kw(2.125), 2.12);
}

}  // namespace
}  // namespace ppcc::dcc
