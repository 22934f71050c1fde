#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ppcc::sim {

/// Rows of one experiment, written as CSV behind a '#' comment header that
/// names the experiment, the seed and the config digest.
struct CsvReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::string config_digest;
  std::vector<std::string> notes;  // extra comment lines
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Throws invalid_argument when the row does not match the header.
  void add_row(std::vector<std::string> row);
  std::string to_csv() const;
  void write(const std::string& path) const;
};

/// Fixed-point text for CSV cells, `digits` after the point.
std::string fmt(double v, int digits = 6);

}  // namespace ppcc::sim
