#include "ppcc/coord/priority.hpp"

#include <algorithm>
#include <cmath>

#include "ppcc/common/error.hpp"

namespace ppcc::coord {

void ChargingState::validate() const {
  if (!(soc >= 0.0 && soc <= 1.0)) throw Error(Errc::invalid_argument, "SoC outside [0, 1]");
  if (!(tcc >= 1.0)) throw Error(Errc::invalid_argument, "TCC below one slot");
  if (!(demand_kw > 0.0)) throw Error(Errc::invalid_argument, "demand must be positive");
}

void WeightConfig::validate() const {
  if (alpha_soc < 0.0 || alpha_tcc < 0.0 || std::abs(alpha_soc + alpha_tcc - 1.0) > 1e-12) {
    throw Error(Errc::invalid_argument, "weights must be nonnegative and sum to 1");
  }
}

double f_tcc(double tcc) {
  if (!(tcc >= 1.0)) throw Error(Errc::invalid_argument, "TCC below one slot");
  return 1.0 / tcc;
}

double f_tcc_inverse(double y) {
  if (!(y > 0.0 && y <= 1.0)) throw Error(Errc::invalid_argument, "F^{-1} argument outside (0, 1]");
  return 1.0 / y;
}

double priority(double soc, double tcc, const WeightConfig& w) {
  double u = w.alpha_soc * (1.0 - soc) + w.alpha_tcc * f_tcc(tcc);
  return std::clamp(u, 0.0, 1.0);
}

}  // namespace ppcc::coord
