#include "ppcc/sim/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ppcc/common/bytes.hpp"
#include "ppcc/common/error.hpp"
#include "ppcc/common/hash.hpp"

namespace ppcc::sim {

std::string_view scheme_name(Scheme s) {
  switch (s) {
    case Scheme::ccc: return "ccc";
    case Scheme::dcc: return "dcc";
    case Scheme::fcfs: return "fcfs";
  }
  return "?";
}

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::config_invalid, what); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    invalid("bad value for " + std::string(key) + ": '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  invalid("bad boolean for " + std::string(key) + ": '" + std::string(v) + "'");
}

Scheme parse_scheme(std::string_view v) {
  if (v == "ccc") return Scheme::ccc;
  if (v == "dcc") return Scheme::dcc;
  if (v == "fcfs") return Scheme::fcfs;
  invalid("unknown scheme '" + std::string(v) + "'");
}

using Setter = std::function<void(SimConfig&, std::string_view key, std::string_view value)>;

template <class T, class M>
Setter number(M SimConfig::*member) {
  return [member](SimConfig& c, std::string_view k, std::string_view v) { c.*member = parse_number<T>(k, v); };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"scheme", [](SimConfig& c, auto, auto v) { c.scheme = parse_scheme(v); }},
      {"n_esus", number<int>(&SimConfig::n_esus)},
      {"slots", number<int>(&SimConfig::slots)},
      {"capacity_kw", number<double>(&SimConfig::capacity_kw)},
      {"battery_kw", number<double>(&SimConfig::battery_kw)},
      {"soc_min_kw", number<double>(&SimConfig::soc_min_kw)},
      {"soc_max_kw", number<double>(&SimConfig::soc_max_kw)},
      {"tcc_min", number<int>(&SimConfig::tcc_min)},
      {"tcc_max", number<int>(&SimConfig::tcc_max)},
      {"consumption_kw", number<double>(&SimConfig::consumption_kw)},
      {"consumption_spread_kw", number<double>(&SimConfig::consumption_spread_kw)},
      {"alpha_soc", [](SimConfig& c, auto k, auto v) { c.weights.alpha_soc = parse_number<double>(k, v); }},
      {"alpha_tcc", [](SimConfig& c, auto k, auto v) { c.weights.alpha_tcc = parse_number<double>(k, v); }},
      {"n_subrequests", number<int>(&SimConfig::n_subrequests)},
      {"spread", number<double>(&SimConfig::spread)},
      {"levels", [](SimConfig& c, auto k, auto v) { c.layout.levels = parse_number<int>(k, v); }},
      {"level_bits", [](SimConfig& c, auto k, auto v) { c.layout.bits = parse_number<unsigned>(k, v); }},
      {"crypto", [](SimConfig& c, auto k, auto v) { c.crypto = parse_bool(k, v); }},
      {"pairing_bits", number<unsigned>(&SimConfig::pairing_bits)},
      {"paillier_bits", number<unsigned>(&SimConfig::paillier_bits)},
      {"dcc_nodes", number<int>(&SimConfig::dcc_nodes)},
      {"proxies", number<int>(&SimConfig::proxies)},
      {"seed", number<std::uint64_t>(&SimConfig::seed)},
  };
  return table;
}

}  // namespace

void SimConfig::validate() const {
  if (n_esus < 1) invalid("n_esus must be at least 1");
  if (slots < 0) invalid("slots must be nonnegative");
  if (!(capacity_kw > 0.0)) invalid("capacity_kw must be positive");
  if (!(battery_kw > 0.0)) invalid("battery_kw must be positive");
  if (!(soc_min_kw >= 0.0 && soc_min_kw <= soc_max_kw && soc_max_kw <= battery_kw)) {
    invalid("need 0 <= soc_min_kw <= soc_max_kw <= battery_kw");
  }
  if (tcc_min < 1 || tcc_max < tcc_min) invalid("need 1 <= tcc_min <= tcc_max");
  if (!(consumption_spread_kw >= 0.0 && consumption_kw >= consumption_spread_kw)) {
    invalid("need 0 <= consumption_spread_kw <= consumption_kw");
  }
  if (!(weights.alpha_soc >= 0.0 && weights.alpha_tcc >= 0.0 &&
        std::abs(weights.alpha_soc + weights.alpha_tcc - 1.0) < 1e-9)) {
    invalid("weights must be nonnegative and sum to 1");
  }
  if (n_subrequests < 1) invalid("n_subrequests must be at least 1");
  if (!(spread > 0.0)) invalid("spread must be positive");
  if (layout.levels < 1 || layout.bits < 1 || layout.bits > 4096) invalid("bad level layout");
  if (dcc_nodes < 1) invalid("dcc_nodes must be at least 1");
  if (proxies < 0) invalid("proxies must be nonnegative");
  if (crypto) {
    if (pairing_bits != 160 && pairing_bits != 224 && pairing_bits != 256) {
      invalid("pairing_bits must be 160, 224 or 256");
    }
    if (scheme == Scheme::dcc && (paillier_bits % 2 != 0 || paillier_bits < layout.total_bits() + 2)) {
      invalid("paillier_bits must be even and exceed the level packing");
    }
  }
}

std::string SimConfig::to_text() const {
  std::ostringstream o;
  o << "scheme = " << scheme_name(scheme) << '\n'
    << "n_esus = " << n_esus << '\n'
    << "slots = " << slots << '\n'
    << "capacity_kw = " << fmt_double(capacity_kw) << '\n'
    << "battery_kw = " << fmt_double(battery_kw) << '\n'
    << "soc_min_kw = " << fmt_double(soc_min_kw) << '\n'
    << "soc_max_kw = " << fmt_double(soc_max_kw) << '\n'
    << "tcc_min = " << tcc_min << '\n'
    << "tcc_max = " << tcc_max << '\n'
    << "consumption_kw = " << fmt_double(consumption_kw) << '\n'
    << "consumption_spread_kw = " << fmt_double(consumption_spread_kw) << '\n'
    << "alpha_soc = " << fmt_double(weights.alpha_soc) << '\n'
    << "alpha_tcc = " << fmt_double(weights.alpha_tcc) << '\n'
    << "n_subrequests = " << n_subrequests << '\n'
    << "spread = " << fmt_double(spread) << '\n'
    << "levels = " << layout.levels << '\n'
    << "level_bits = " << layout.bits << '\n'
    << "crypto = " << (crypto ? "true" : "false") << '\n'
    << "pairing_bits = " << pairing_bits << '\n'
    << "paillier_bits = " << paillier_bits << '\n'
    << "dcc_nodes = " << dcc_nodes << '\n'
    << "proxies = " << proxies << '\n'
    << "seed = " << seed << '\n';
  return o.str();
}

std::string SimConfig::digest() const {
  const auto d = sha256(to_bytes(to_text()));
  return to_hex(d);
}

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) invalid("line " + std::to_string(line_no) + ": expected key = value");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) invalid("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    it->second(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace ppcc::sim
