#pragma once

namespace ppcc::coord {

/// SoC as a fraction, time-to-complete in slots, demand in kW.
struct ChargingState {
  double soc = 0.0;
  double tcc = 1.0;
  double demand_kw = 0.0;

  /// Throws invalid_argument unless 0 <= soc <= 1, tcc >= 1, demand > 0.
  void validate() const;
};

/// Priority weights; alpha_soc + alpha_tcc must equal 1.
struct WeightConfig {
  double alpha_soc = 0.9;
  double alpha_tcc = 0.1;

  void validate() const;
};

/// F(T) = 1/T: 1 for T = 1, decreasing towards 0. Throws for T < 1.
double f_tcc(double tcc);

/// Inverse of f_tcc on (0, 1].
double f_tcc_inverse(double y);

/// U = alpha_soc (1 - S) + alpha_tcc F(T), in [0, 1].
double priority(double soc, double tcc, const WeightConfig& w);
inline double priority(const ChargingState& s, const WeightConfig& w) { return priority(s.soc, s.tcc, w); }

}  // namespace ppcc::coord
