#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace ppcc::dcc {

/// Priority levels packed into one integer: level i (1-based) occupies bits
/// [(i-1)*bits, i*bits), level 1 at the least-significant end. Level i
/// covers priorities [(i-1)/levels, i/levels), the top level closed at 1.
struct LevelLayout {
  int levels = 10;
  unsigned bits = 100;

  unsigned total_bits() const { return static_cast<unsigned>(levels) * bits; }
  /// Throws invalid_argument unless the packing fits under
  /// `plaintext_bits` with `margin` bits to spare.
  void validate(unsigned plaintext_bits = 0, unsigned margin = 0) const;
};

/// Per-level demand totals in kW, index 0 is level 1.
using LevelVector = std::vector<mpz_class>;

int level_of(double priority, const LevelLayout& layout);

/// Demand placed in its level's slot. Throws demand_overflow when it does
/// not fit in `bits`.
mpz_class encode_request(std::uint64_t demand_kw, double priority, const LevelLayout& layout);

/// Bit-slices an aggregate back into per-level totals.
LevelVector decode_total(const mpz_class& total, const LevelLayout& layout);

struct Threshold {
  int full_from = 1;  // lowest level granted in full; levels + 1 when none is
  int boundary = 0;   // level sharing the slack, 0 when every level fits
  double slack_kw = 0.0;
};

/// Accumulates levels from the top while the running total fits in C. The
/// first level that would overflow is the boundary; the slack is what the
/// admitted levels leave of C.
Threshold find_threshold(const LevelVector& totals, double capacity_kw);

/// kW for one ESU: full demand above the boundary, slack * P / total(boundary)
/// at it, nothing below.
double allotment(double demand_kw, int own_level, const LevelVector& totals, const Threshold& th);

/// Half-even rounding to 0.01 kW for display.
double round_centi_kw(double kw);

}  // namespace ppcc::dcc
