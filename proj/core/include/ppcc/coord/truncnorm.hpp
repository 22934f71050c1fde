#pragma once

#include "ppcc/common/rng.hpp"

namespace ppcc::coord {

/// Normal(mean, sd) restricted to [lo, hi].
struct TruncNormParams {
  double mean = 0.0;
  double sd = 1.0;
  double lo = 0.0;
  double hi = 1.0;

  void validate() const;
};

double normal_cdf(double z);
/// Standard normal quantile; p in (0, 1).
double normal_quantile(double p);

double truncnorm_pdf(double x, const TruncNormParams& p);
double truncnorm_cdf(double x, const TruncNormParams& p);
/// Inverse CDF at u in [0, 1]; u = 0 gives lo and u = 1 gives hi.
double truncnorm_quantile(double u, const TruncNormParams& p);
/// Inverse-transform sample, always within [lo, hi].
double sample_truncnorm(const TruncNormParams& p, Rng& rng);

}  // namespace ppcc::coord
