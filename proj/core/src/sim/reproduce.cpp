#include "ppcc/sim/reproduce.hpp"

#include <cmath>

#include "ppcc/attack/collusion.hpp"
#include "ppcc/attack/linkage.hpp"
#include "ppcc/common/error.hpp"
#include "ppcc/protocol/dcc_round.hpp"
#include "ppcc/sim/config.hpp"
#include "ppcc/sim/scenario.hpp"

namespace ppcc::sim {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CsvReport start(std::string_view id, const ReproduceOptions& o, std::vector<std::string> header) {
  CsvReport r;
  r.experiment = std::string(id);
  r.seed = o.seed;
  r.header = std::move(header);
  r.notes.push_back("runs: " + std::to_string(o.runs));
  return r;
}

// The worked example: ten ESUs, C = 300 kW.
CsvReport table3(const ReproduceOptions& o) {
  struct Row {
    std::uint64_t demand;
    double priority;
  };
  const std::vector<Row> esus = {{10, 0.333}, {30, 0.250}, {50, 1.0},  {60, 0.166}, {90, 0.333},
                                 {20, 0.143}, {5, 0.143},  {40, 0.5},  {20, 1.0},   {70, 0.200}};
  protocol::DccConfig cfg;
  cfg.capacity_kw = 300.0;
  dcc::LevelVector totals(static_cast<std::size_t>(cfg.layout.levels));
  for (const auto& e : esus) totals[static_cast<std::size_t>(dcc::level_of(e.priority, cfg.layout) - 1)] += e.demand;

  auto r = start("table3", o, {"esu", "demand_kw", "priority", "level", "granted_kw"});
  r.notes.clear();
  double total = 0.0;
  dcc::Threshold th;
  for (std::size_t i = 0; i < esus.size(); ++i) {
    const protocol::DccParticipant p{static_cast<protocol::EsuId>(i + 1), {}, esus[i].demand, esus[i].priority};
    const double e = dcc::round_centi_kw(protocol::dcc_local_allotment(p, totals, cfg, &th));
    total += e;
    r.add_row({std::to_string(i + 1), std::to_string(esus[i].demand), fmt(esus[i].priority, 3),
               std::to_string(dcc::level_of(esus[i].priority, cfg.layout)), fmt(e, 2)});
  }
  r.notes.push_back("capacity_kw: 300");
  r.notes.push_back("boundary-level: " + std::to_string(th.boundary));
  r.notes.push_back("slack_kw: " + fmt(th.slack_kw, 2));
  r.notes.push_back("total_granted_kw: " + fmt(total, 2));
  return r;
}

// Undefended linkage, 20..140 ESUs, the three SoC/TCC attacks.
CsvReport linkage_baseline(std::string_view id, attack::Resolution res, const ReproduceOptions& o) {
  auto r = start(id, o, {"n_esus", "attack", "resolution", "mean_success", "stderr"});
  const attack::AttackKind kinds[] = {attack::AttackKind::soc, attack::AttackKind::tcc, attack::AttackKind::both};
  for (int n = 20; n <= 140; n += 20) {
    for (const auto kind : kinds) {
      attack::BaselineScenario sc;
      sc.n_esus = n;
      sc.resolution = res;
      attack::AttackConfig ac;
      ac.kind = kind;
      double sum = 0.0, sq = 0.0;
      for (int run = 0; run < o.runs; ++run) {
        Rng rng(run_seed(o.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(run)));
        const double p = attack::baseline_success(sc, ac, rng);
        sum += p;
        sq += p * p;
      }
      const double mean = sum / o.runs;
      const double var = o.runs > 1 ? (sq - o.runs * mean * mean) / (o.runs - 1) : 0.0;
      r.add_row({std::to_string(n), std::string(attack::attack_name(kind)), std::string(attack::resolution_name(res)),
                 fmt(mean), fmt(std::sqrt(std::max(var, 0.0) / o.runs))});
    }
  }
  return r;
}

// Per-run success with n = 1, 3, 5 sub-requests.
CsvReport defense(std::string_view id, bool priority_attack, const ReproduceOptions& o) {
  auto r = start(id, o, {"n_subrequests", "run", "attack", "success"});
  attack::AttackConfig soc_tcc;
  attack::AttackConfig prio;
  prio.kind = attack::AttackKind::priority;
  for (const int n : {1, 3, 5}) {
    attack::DefenseScenario sc;
    sc.n_subrequests = n;
    for (int run = 0; run < o.runs; ++run) {
      // Same population for every n.
      Rng rng(run_seed(o.seed, 0, static_cast<std::uint64_t>(run)));
      const auto d = attack::evaluate_defense(sc, soc_tcc, prio, rng);
      r.add_row({std::to_string(n), std::to_string(run), priority_attack ? "priority" : "soc+tcc",
                 fmt(priority_attack ? d.priority_success : d.soc_tcc_success)});
    }
  }
  return r;
}

double mean_index(Scheme scheme, int n_esus, const ReproduceOptions& o) {
  double sum = 0.0;
  for (int run = 0; run < o.runs; ++run) {
    SimConfig c;
    c.scheme = scheme;
    c.n_esus = n_esus;
    c.seed = run_seed(o.seed, static_cast<std::uint64_t>(n_esus), static_cast<std::uint64_t>(run));
    sum += simulate(c).charging_index;
  }
  return sum / o.runs;
}

CsvReport charging(std::string_view id, Scheme scheme, const ReproduceOptions& o) {
  const std::string name(scheme_name(scheme));
  auto r = start(id, o, {"n_esus", name, "fcfs"});
  r.config_digest = SimConfig{}.digest();
  r.notes.push_back("config: defaults with scheme and n_esus swept, seed per run");
  for (int n = 1; n <= 80; ++n) {
    r.add_row({std::to_string(n), fmt(mean_index(scheme, n, o), 4), fmt(mean_index(Scheme::fcfs, n, o), 4)});
  }
  return r;
}

// Probability that all proxies of one ESU are malicious, n = 300.
CsvReport collusion(const ReproduceOptions& o) {
  auto r = start("fig10", o, {"lambda", "malicious", "probability"});
  r.notes.clear();
  r.notes.push_back("n: 300");
  const long n = 300;
  for (const long lambda : {4L, 8L, 16L}) {
    for (long m = 0; m <= n; m += 10) {
      r.add_row({std::to_string(lambda), std::to_string(m), fmt(attack::collusion_pdf(n, m, lambda, lambda), 10)});
    }
  }
  return r;
}

}  // namespace

std::uint64_t run_seed(std::uint64_t base, std::uint64_t point, std::uint64_t run) {
  return splitmix(splitmix(splitmix(base) ^ point) ^ run);
}

const std::vector<std::string>& experiment_ids() {
  static const std::vector<std::string> ids = {"fig4", "fig5", "fig7a", "fig7b", "fig9a", "fig9b", "fig10", "table3"};
  return ids;
}

CsvReport reproduce(std::string_view id, const ReproduceOptions& opts) {
  if (opts.runs < 1) throw Error(Errc::config_invalid, "runs must be at least 1");
  if (id == "table3") return table3(opts);
  if (id == "fig4") return linkage_baseline(id, attack::Resolution::low, opts);
  if (id == "fig5") return linkage_baseline(id, attack::Resolution::high, opts);
  if (id == "fig7a") return defense(id, false, opts);
  if (id == "fig7b") return defense(id, true, opts);
  if (id == "fig9a") return charging(id, Scheme::ccc, opts);
  if (id == "fig9b") return charging(id, Scheme::dcc, opts);
  if (id == "fig10") return collusion(opts);
  throw Error(Errc::unknown_identifier, "no experiment named '" + std::string(id) + "'");
}

}  // namespace ppcc::sim
