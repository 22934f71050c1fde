#include "ppcc/coord/truncnorm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/erf.hpp>

#include "ppcc/common/error.hpp"

namespace ppcc::coord {

namespace {

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi); }

// Quantile computed on whichever tail keeps the probabilities away from 1,
// so bounds deep in the upper tail do not lose precision.
double quantile_lower(double u, double mean, double sd, double lo, double hi) {
  const double za = (lo - mean) / sd;
  const double zb = (hi - mean) / sd;
  const double fa = normal_cdf(za);
  const double fb = normal_cdf(zb);
  const double target = fa + u * (fb - fa);
  if (target <= 0.0) return lo;
  if (target >= 1.0) return hi;
  return mean + sd * normal_quantile(target);
}

}  // namespace

void TruncNormParams::validate() const {
  if (!(sd > 0.0)) throw Error(Errc::invalid_argument, "truncated normal needs sd > 0");
  if (!(lo < hi)) throw Error(Errc::invalid_argument, "truncated normal needs lo < hi");
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw Error(Errc::invalid_argument, "quantile argument outside (0, 1)");
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

// Mass of N(0, 1) on [za, zb], taken from the lower tail.
static double normal_mass(double za, double zb) {
  if (za > 0.0) return normal_cdf(-za) - normal_cdf(-zb);
  return normal_cdf(zb) - normal_cdf(za);
}

double truncnorm_pdf(double x, const TruncNormParams& p) {
  p.validate();
  if (x < p.lo || x > p.hi) return 0.0;
  const double z = normal_mass((p.lo - p.mean) / p.sd, (p.hi - p.mean) / p.sd);
  return normal_pdf((x - p.mean) / p.sd) / (p.sd * z);
}

double truncnorm_cdf(double x, const TruncNormParams& p) {
  p.validate();
  if (x <= p.lo) return 0.0;
  if (x >= p.hi) return 1.0;
  const double za = (p.lo - p.mean) / p.sd;
  const double zb = (p.hi - p.mean) / p.sd;
  const double zx = (x - p.mean) / p.sd;
  return std::clamp(normal_mass(za, zx) / normal_mass(za, zb), 0.0, 1.0);
}

double truncnorm_quantile(double u, const TruncNormParams& p) {
  p.validate();
  if (u <= 0.0) return p.lo;
  if (u >= 1.0) return p.hi;
  double x;
  if (p.lo > p.mean) {
    // Mirror: X = -Y with Y ~ TN(-mean, sd, [-hi, -lo]).
    x = -quantile_lower(1.0 - u, -p.mean, p.sd, -p.hi, -p.lo);
  } else {
    x = quantile_lower(u, p.mean, p.sd, p.lo, p.hi);
  }
  return std::clamp(x, p.lo, p.hi);
}

double sample_truncnorm(const TruncNormParams& p, Rng& rng) { return truncnorm_quantile(rng.uniform01(), p); }

}  // namespace ppcc::coord
