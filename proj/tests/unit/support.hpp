#pragma once

#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "ppcc/common/error.hpp"
#include "ppcc/pairing/group.hpp"

namespace ppcc::test {

// Runs `body` and checks it throws ppcc::Error with `code`.
template <typename F>
void expect_errc(Errc code, F&& body) {
  try {
    body();
    ADD_FAILURE() << "expected " << errc_name(code) << ", nothing thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

template <typename F>
long thrown_index(F&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.index();
  }
  return -2;
}

inline const pairing::GroupParams& g160() { return *pairing::setup_pairing(160); }
inline const pairing::GroupParams& g224() { return *pairing::setup_pairing(224); }

// `name = hex` lines from a fixture file.
inline std::map<std::string, std::string> read_fixture(const std::string& file) {
  std::ifstream in(std::string(PPCC_FIXTURE_DIR) + "/" + file);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) out[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return out;
}

// Two-sample chi-square statistic over equally sized bucket counts.
inline double chi_square_two_sample(const std::vector<int>& a, const std::vector<int>& b) {
  double stat = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double s = a[i] + b[i];
    if (s == 0) continue;
    const double d = a[i] - b[i];
    stat += d * d / s;
  }
  return stat;
}

}  // namespace ppcc::test
