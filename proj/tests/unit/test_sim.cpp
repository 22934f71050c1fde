#include "support.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sys/wait.h>

#include "ppcc/sim/config.hpp"
#include "ppcc/sim/reproduce.hpp"
#include "ppcc/sim/scenario.hpp"

namespace ppcc::sim {
namespace {

TEST(Config, ParseAndCanonicalText) {
  const auto cfg = parse_config(
      "# small ccc run\n"
      "scheme = ccc\n"
      "n_esus = 12   # trailing comment\n"
      "capacity_kw = 250.5\n"
      "n_subrequests = 3\n"
      "seed = 99\n");
  EXPECT_EQ(cfg.scheme, Scheme::ccc);
  EXPECT_EQ(cfg.n_esus, 12);
  EXPECT_EQ(cfg.capacity_kw, 250.5);
  EXPECT_EQ(cfg.n_subrequests, 3);
  EXPECT_EQ(cfg.seed, 99u);
  EXPECT_EQ(cfg.slots, SimConfig{}.slots);

  const auto again = parse_config(cfg.to_text());
  EXPECT_EQ(again.to_text(), cfg.to_text());
  EXPECT_EQ(again.digest(), cfg.digest());
  EXPECT_EQ(cfg.digest().size(), 64u);
  auto other = cfg;
  other.seed = 100;
  EXPECT_NE(other.digest(), cfg.digest());
}

TEST(Config, Rejections) {
  for (const char* text : {"colour = blue\n", "n_esus = twelve\n", "n_esus = 12x\n", "scheme = round_robin\n",
                           "capacity_kw = -5\n", "capacity_kw = 0\n", "n_subrequests = 0\n", "no equals sign\n",
                           "spread = -0.1\n", "tcc_min = 10\ntcc_max = 5\n"}) {
    test::expect_errc(Errc::config_invalid, [&] { parse_config(text); });
  }
  test::expect_errc(Errc::config_invalid, [] { load_config("/nonexistent/ppcc.cfg"); });
}

SimConfig small(Scheme s, std::uint64_t seed) {
  SimConfig c;
  c.scheme = s;
  c.n_esus = 8;
  c.slots = 3;
  c.capacity_kw = 250;
  c.n_subrequests = 2;
  c.seed = seed;
  return c;
}

TEST(Scenario, ZeroSlotsIsEmpty) {
  for (const auto s : {Scheme::ccc, Scheme::dcc, Scheme::fcfs}) {
    auto c = small(s, 1);
    c.slots = 0;
    const auto out = simulate(c);
    EXPECT_TRUE(out.slots.empty());
    EXPECT_EQ(out.charging_index, 0);
    EXPECT_TRUE(run_scenario(c).rows.empty());
  }
}

TEST(Scenario, Deterministic) {
  for (const auto s : {Scheme::ccc, Scheme::dcc, Scheme::fcfs}) {
    auto c = small(s, 7);
    c.n_esus = 40;
    c.slots = 30;
    EXPECT_EQ(run_scenario(c).to_csv(), run_scenario(c).to_csv()) << scheme_name(s);
    auto d = c;
    d.seed = 8;
    EXPECT_NE(run_scenario(c).to_csv(), run_scenario(d).to_csv()) << scheme_name(s);
  }
}

TEST(Scenario, ReportCarriesSeedAndDigest) {
  const auto c = small(Scheme::fcfs, 3);
  const auto csv = run_scenario(c).to_csv();
  EXPECT_NE(csv.find("# seed: 3"), std::string::npos);
  EXPECT_NE(csv.find("# config-digest: " + c.digest()), std::string::npos);
}

TEST(Scenario, Conservation) {
  for (const auto s : {Scheme::ccc, Scheme::dcc, Scheme::fcfs}) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      auto c = small(s, seed);
      c.n_esus = 30;
      c.slots = 30;
      c.capacity_kw = 600;
      c.consumption_kw = 1;
      const auto out = simulate(c);
      for (const auto& slot : out.grants) {
        double sum = 0;
        for (const double g : slot) {
          EXPECT_GE(g, 0.0);
          sum += g;
        }
        EXPECT_LE(sum, c.capacity_kw + 1e-9);
      }
      for (const auto& r : out.slots) EXPECT_LE(r.granted_kw, c.capacity_kw + 1e-9);
      int expired = 0;
      for (const auto& r : out.records) {
        EXPECT_LE(r.granted_kw, r.demand_kw + 1e-9);
        expired += r.expired;
      }
      EXPECT_EQ(expired, out.charging_index);
    }
  }
}

TEST(Scenario, CryptoModeReproducesPlaintextSchedules) {
  for (const auto s : {Scheme::ccc, Scheme::dcc, Scheme::fcfs}) {
    for (const std::uint64_t seed : {11u, 12u}) {
      auto c = small(s, seed);
      c.pairing_bits = 160;
      c.paillier_bits = 1024;
      c.dcc_nodes = 2;
      const auto plain = simulate(c);
      c.crypto = true;
      const auto real = simulate(c);
      EXPECT_EQ(real.grants, plain.grants) << scheme_name(s);
      EXPECT_EQ(real.charging_index, plain.charging_index);
      EXPECT_EQ(real.level_totals, plain.level_totals);
      ASSERT_EQ(real.slots.size(), plain.slots.size());
      for (std::size_t i = 0; i < real.slots.size(); ++i) {
        EXPECT_EQ(real.slots[i].messages, plain.slots[i].messages);
        EXPECT_EQ(plain.slots[i].bytes, 0u);
        if (s != Scheme::fcfs) EXPECT_GT(real.slots[i].bytes, 0u);
      }
    }
  }
}

TEST(Reproduce, Table3) {
  const auto r = reproduce("table3");
  ASSERT_EQ(r.rows.size(), 10u);
  const std::array<double, 10> expect = {10, 27, 50, 0, 90, 0, 0, 40, 20, 63};
  const auto col = std::find(r.header.begin(), r.header.end(), "granted_kw") - r.header.begin();
  ASSERT_LT(col, static_cast<long>(r.header.size()));
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(std::stod(r.rows[i][col]), expect[i]) << i;
  const auto csv = r.to_csv();
  EXPECT_NE(csv.find("slack_kw: 90.00"), std::string::npos) << csv;
  EXPECT_NE(csv.find("total_granted_kw: 300.00"), std::string::npos) << csv;
}

TEST(Reproduce, Fig10) {
  const auto r = reproduce("fig10");
  EXPECT_EQ(r.rows.size(), 3u * 31u);
  bool found = false;
  for (const auto& row : r.rows) {
    if (row[0] == "4" && row[1] == "100") {
      EXPECT_NEAR(std::stod(row[2]), 0.01185, 5e-6);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Reproduce, Errors) {
  test::expect_errc(Errc::unknown_identifier, [] { reproduce("fig99"); });
  test::expect_errc(Errc::config_invalid, [] { reproduce("fig4", {1, 0}); });
  EXPECT_EQ(experiment_ids().size(), 8u);
  EXPECT_EQ(run_seed(1, 2, 3), run_seed(1, 2, 3));
  EXPECT_NE(run_seed(1, 2, 3), run_seed(1, 3, 2));
}

struct CliResult {
  int status;
  std::string out;
};

CliResult cli(const std::string& args) {
  const std::string cmd = std::string(PPCC_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

TEST(Cli, Table3) {
  const auto r = cli("reproduce table3");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find(",63.00"), std::string::npos) << r.out;
}

TEST(Cli, Sizes) {
  const auto r = cli("sizes --n 10");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_NE(r.out.find("1392"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("248"), std::string::npos) << r.out;
}

TEST(Cli, RunWritesCsvAndRejectsBadConfig) {
  const auto dir = std::filesystem::temp_directory_path() / "ppcc_cli_test";
  std::filesystem::create_directories(dir);
  const auto good = dir / "good.cfg", bad = dir / "bad.cfg", out = dir / "out.csv";
  std::ofstream(good) << "scheme = fcfs\nn_esus = 5\nslots = 4\n";
  std::ofstream(bad) << "capacity_kw = -1\n";

  auto r = cli("run --config " + good.string() + " --seed 5 --out " + out.string());
  EXPECT_EQ(r.status, 0) << r.out;
  std::ifstream in(out);
  const std::string csv((std::istreambuf_iterator<char>(in)), {});
  EXPECT_NE(csv.find("# seed: 5"), std::string::npos) << csv;

  r = cli("run --config " + bad.string());
  EXPECT_NE(r.status, 0);
  EXPECT_FALSE(r.out.empty());
  EXPECT_NE(cli("reproduce nosuchfigure").status, 0);
  EXPECT_NE(cli("frobnicate").status, 0);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ppcc::sim
