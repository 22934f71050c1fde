// Command line front end: key generation, simulation runs, experiment
// reproduction, attack sweeps and message-size tables.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppcc/attack/linkage.hpp"
#include "ppcc/common/error.hpp"
#include "ppcc/paillier/paillier.hpp"
#include "ppcc/pairing/pbs.hpp"
#include "ppcc/protocol/ccc.hpp"
#include "ppcc/protocol/sizes.hpp"
#include "ppcc/sim/config.hpp"
#include "ppcc/sim/reproduce.hpp"
#include "ppcc/sim/scenario.hpp"

namespace {

using namespace ppcc;

void emit(const sim::CsvReport& report, const std::string& out) {
  if (out.empty()) {
    std::cout << report.to_csv();
  } else {
    report.write(out);
    std::cerr << "wrote " << out << " (" << report.rows.size() << " rows)\n";
  }
}

nlohmann::json config_json(const sim::SimConfig& c) {
  return {{"scheme", std::string(sim::scheme_name(c.scheme))},
          {"n_esus", c.n_esus},
          {"slots", c.slots},
          {"capacity_kw", c.capacity_kw},
          {"battery_kw", c.battery_kw},
          {"soc_min_kw", c.soc_min_kw},
          {"soc_max_kw", c.soc_max_kw},
          {"tcc_min", c.tcc_min},
          {"tcc_max", c.tcc_max},
          {"consumption_kw", c.consumption_kw},
          {"consumption_spread_kw", c.consumption_spread_kw},
          {"alpha_soc", c.weights.alpha_soc},
          {"alpha_tcc", c.weights.alpha_tcc},
          {"n_subrequests", c.n_subrequests},
          {"spread", c.spread},
          {"levels", c.layout.levels},
          {"level_bits", c.layout.bits},
          {"crypto", c.crypto},
          {"pairing_bits", c.pairing_bits},
          {"paillier_bits", c.paillier_bits},
          {"dcc_nodes", c.dcc_nodes},
          {"proxies", c.proxies},
          {"seed", c.seed},
          {"digest", c.digest()}};
}

int cmd_keygen(std::uint64_t seed, unsigned level, unsigned paillier_bits, const std::string& out) {
  auto g = pairing::setup_pairing(level);
  Rng rng(seed);
  protocol::ChargingController cc(g, {}, rng);
  const auto info = cc.public_info();
  const auto pk = paillier::keygen(paillier_bits, rng).pk;
  nlohmann::json j = {{"seed", seed},
                      {"pairing_order_bits", g->order_bits()},
                      {"cc_pbs_public", to_hex(g->encode(info.pbs_pub))},
                      {"cc_kem_public", to_hex(g->encode(info.kem_pub))},
                      {"cc_sign_public", to_hex(g->encode(info.sign_pub))},
                      {"paillier_modulus", pk.n.get_str(16)},
                      {"paillier_bits", pk.bits()}};
  const auto text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out) << text;
  }
  return 0;
}

int cmd_sizes(std::size_t n, std::optional<unsigned> level) {
  const auto ref = protocol::payload_sizes(protocol::WidthProfile::reference());
  std::printf("reference field widths (224-bit group elements, 128-bit ciphertexts)\n");
  std::printf("  msg1 %zu\n  msg2 %zu\n  msg3 %zu\n", ref.msg1, ref.msg2, ref.msg3);
  std::printf("  msg4 %zu*N + %zu = %zu (N=%zu)\n", ref.msg4_per_request, ref.msg4_fixed, ref.msg4(n), n);
  std::printf("  msg5 %zu*N + %zu = %zu (N=%zu)\n", ref.msg5_per_request, ref.msg5_fixed, ref.msg5(n), n);
  if (level) {
    auto g = pairing::setup_pairing(*level);
    const auto imp = protocol::payload_sizes(protocol::WidthProfile::implementation(*g));
    const auto fr = protocol::measure_frames(*g, n);
    std::printf("this implementation, %u-bit group (payload / framed)\n", *level);
    std::printf("  msg1 %zu / %zu\n  msg2 %zu / %zu\n  msg3 %zu / %zu\n", imp.msg1, fr.msg1, imp.msg2, fr.msg2,
                imp.msg3, fr.msg3);
    std::printf("  msg4 %zu / %zu\n  msg5 %zu / %zu\n", imp.msg4(n), fr.msg4, imp.msg5(n), fr.msg5);
  }
  return 0;
}

attack::AttackKind parse_kind(const std::string& s) {
  if (s == "soc") return attack::AttackKind::soc;
  if (s == "tcc") return attack::AttackKind::tcc;
  if (s == "both" || s == "soc+tcc") return attack::AttackKind::both;
  if (s == "priority") return attack::AttackKind::priority;
  throw Error(Errc::unknown_identifier, "attack kind '" + s + "'");
}

struct AttackArgs {
  std::string kind = "both";
  std::string resolution = "low";
  int n_esus = 20;
  int subrequests = 0;
  int runs = 100;
  double threshold = 2.0;
};

int cmd_attack(const AttackArgs& a, std::uint64_t seed, const std::string& out) {
  attack::AttackConfig ac;
  ac.kind = parse_kind(a.kind);
  ac.threshold = a.threshold;
  const auto res = a.resolution == "high" ? attack::Resolution::high : attack::Resolution::low;
  if (a.resolution != "high" && a.resolution != "low") {
    throw Error(Errc::unknown_identifier, "resolution '" + a.resolution + "'");
  }
  if (a.runs < 1 || a.n_esus < 1) throw Error(Errc::invalid_parameters, "runs and n-esus must be positive");

  sim::CsvReport r;
  r.experiment = a.subrequests > 0 ? "attack/defense" : "attack/baseline";
  r.seed = seed;
  r.header = {"run", "n_esus", "n_subrequests", "attack", "resolution", "success"};
  for (int run = 0; run < a.runs; ++run) {
    Rng rng(sim::run_seed(seed, static_cast<std::uint64_t>(a.n_esus), static_cast<std::uint64_t>(run)));
    double p = 0.0;
    if (a.subrequests > 0) {
      attack::DefenseScenario sc;
      sc.n_esus = a.n_esus;
      sc.n_subrequests = a.subrequests;
      sc.resolution = res;
      attack::AttackConfig prio = ac;
      prio.kind = attack::AttackKind::priority;
      const auto d = attack::evaluate_defense(sc, ac, prio, rng);
      p = ac.kind == attack::AttackKind::priority ? d.priority_success : d.soc_tcc_success;
    } else {
      attack::BaselineScenario sc;
      sc.n_esus = a.n_esus;
      sc.resolution = res;
      p = attack::baseline_success(sc, ac, rng);
    }
    r.add_row({std::to_string(run), std::to_string(a.n_esus), std::to_string(std::max(a.subrequests, 1)),
               std::string(attack::attack_name(ac.kind)), std::string(attack::resolution_name(res)), sim::fmt(p)});
  }
  emit(r, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Privacy-preserving charging coordination: simulator and tools"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string out;

  auto* keygen = app.add_subcommand("keygen", "Generate CC and Paillier keys from a seed");
  unsigned level = 224, paillier_bits = 2048;
  keygen->add_option("--seed", seed, "RNG seed");
  keygen->add_option("--out", out, "Write JSON here instead of stdout");
  keygen->add_option("--level", level, "Pairing group order bits (160, 224, 256)");
  keygen->add_option("--paillier-bits", paillier_bits, "Paillier modulus bits");

  auto* run = app.add_subcommand("run", "Simulate one scenario");
  std::string config_path, export_json;
  std::optional<std::uint64_t> run_seed;
  run->add_option("--config", config_path, "key = value scenario file")->check(CLI::ExistingFile);
  run->add_option("--seed", run_seed, "Override the config seed");
  run->add_option("--out", out, "CSV path (stdout when omitted)");
  run->add_option("--export-json", export_json, "Also write the effective config as JSON");

  auto* repro = app.add_subcommand("reproduce", "Regenerate the data of a figure or table");
  std::string experiment;
  int runs = 100;
  repro->add_option("id", experiment, "fig4 fig5 fig7a fig7b fig9a fig9b fig10 table3")->required();
  repro->add_option("--seed", seed, "Base seed");
  repro->add_option("--runs", runs, "Runs per sweep point");
  repro->add_option("--out", out, "CSV path (stdout when omitted)");

  auto* atk = app.add_subcommand("attack", "Linkability attack sweep");
  AttackArgs aa;
  atk->add_option("--kind", aa.kind, "soc, tcc, both or priority");
  atk->add_option("--resolution", aa.resolution, "low (1 kW) or high (0.1 kW)");
  atk->add_option("--n-esus", aa.n_esus, "Community size");
  atk->add_option("--subrequests", aa.subrequests, "Split requests into n parts (0: undefended baseline)");
  atk->add_option("--threshold", aa.threshold, "Matching threshold");
  atk->add_option("--runs", aa.runs, "Independent runs");
  atk->add_option("--seed", seed, "Base seed");
  atk->add_option("--out", out, "CSV path (stdout when omitted)");

  auto* sizes = app.add_subcommand("sizes", "Message sizes for N requests");
  std::size_t n = 10;
  std::optional<unsigned> sizes_level;
  sizes->add_option("--n", n, "Requests per batch");
  sizes->add_option("--level", sizes_level, "Also measure real frames at this group size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*keygen) return cmd_keygen(seed, level, paillier_bits, out);
    if (*run) {
      sim::SimConfig cfg = config_path.empty() ? sim::SimConfig{} : sim::load_config(config_path);
      if (run_seed) cfg.seed = *run_seed;
      cfg.validate();
      if (!export_json.empty()) std::ofstream(export_json) << config_json(cfg).dump(2) << '\n';
      emit(sim::run_scenario(cfg), out);
      return 0;
    }
    if (*repro) {
      emit(sim::reproduce(experiment, {seed, runs}), out);
      return 0;
    }
    if (*atk) return cmd_attack(aa, seed, out);
    if (*sizes) return cmd_sizes(n, sizes_level);
  } catch (const Error& e) {
    std::cerr << "ppcc: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ppcc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
