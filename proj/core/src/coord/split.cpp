#include "ppcc/coord/split.hpp"

#include <cmath>

#include "ppcc/common/error.hpp"
#include "ppcc/coord/truncnorm.hpp"

namespace ppcc::coord {

namespace {

// F(T) value needed for (soc, u) to satisfy the priority equation.
double required_f(double u, double soc, const WeightConfig& w) {
  return (u - w.alpha_soc * (1.0 - soc)) / w.alpha_tcc;
}

bool feasible(double y) { return y > 0.0 && y <= 1.0; }

}  // namespace

RequestSplit split_request(const ChargingState& state, int n, const WeightConfig& w, const SplitConfig& cfg,
                           Rng& rng) {
  if (n < 1) throw Error(Errc::invalid_argument, "need at least one sub-request");
  state.validate();
  w.validate();
  if (!(cfg.t_max >= 1.0)) throw Error(Errc::invalid_argument, "t_max below one slot");

  const TruncNormParams tn{priority(state, w), cfg.spread, 0.0, 1.0};
  RequestSplit out{state, {}, 0};
  out.parts.reserve(static_cast<std::size_t>(n));

  double assigned = 0.0;
  for (int k = 0; k < n; ++k) {
    SubRequest part;
    if (k + 1 < n) {
      // Shares on a 2^-40 grid keep every partial sum and the closing
      // difference exact, so the parts add back to S in any order.
      part.soc = std::ldexp(std::floor(std::ldexp(rng.uniform(0.0, state.soc - assigned), 40)), -40);
      assigned += part.soc;
    } else {
      part.soc = state.soc - assigned;
    }

    if (w.alpha_tcc == 0.0) {
      // TCC carries no weight: any value reproduces U = alpha_soc (1 - S).
      part.priority = w.alpha_soc * (1.0 - part.soc);
      part.tcc = 1.0;
      out.parts.push_back(part);
      continue;
    }

    double u = sample_truncnorm(tn, rng);
    double y = required_f(u, part.soc, w);
    for (int r = 0; r < cfg.max_resamples && !feasible(y); ++r) {
      u = sample_truncnorm(tn, rng);
      y = required_f(u, part.soc, w);
    }
    part.priority = u;
    if (feasible(y)) {
      part.tcc = f_tcc_inverse(y);
    } else {
      part.tcc = y <= 0.0 ? cfg.t_max : 1.0;
      part.clamped = true;
      ++out.clamped_count;
    }
    out.parts.push_back(part);
  }
  return out;
}

}  // namespace ppcc::coord
