#include "ppcc/sim/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ppcc/common/error.hpp"

namespace ppcc::sim {

void CsvReport::add_row(std::vector<std::string> row) {
  if (row.size() != header.size()) {
    throw Error(Errc::invalid_argument, "row has " + std::to_string(row.size()) + " cells, header has " +
                                            std::to_string(header.size()));
  }
  rows.push_back(std::move(row));
}

namespace {

void write_line(std::ostringstream& o, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) o << ',';
    o << cells[i];
  }
  o << '\n';
}

}  // namespace

std::string CsvReport::to_csv() const {
  std::ostringstream o;
  o << "# experiment: " << experiment << '\n' << "# seed: " << seed << '\n';
  if (!config_digest.empty()) o << "# config-digest: " << config_digest << '\n';
  for (const auto& n : notes) o << "# " << n << '\n';
  write_line(o, header);
  for (const auto& r : rows) write_line(o, r);
  return o.str();
}

void CsvReport::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_argument, "cannot write " + path);
  out << to_csv();
}

std::string fmt(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) s = s.substr(s[0] == '-' ? 1 : 0);
  return s;
}

}  // namespace ppcc::sim
