#pragma once

#include <vector>

#include "ppcc/common/rng.hpp"
#include "ppcc/coord/priority.hpp"

namespace ppcc::coord {

struct SplitConfig {
  double spread = 0.05;     // sd of the truncated normal around the parent priority
  double t_max = 48.0;      // TCC used when no feasible one exists
  int max_resamples = 16;
};

struct SubRequest {
  double soc = 0.0;
  double tcc = 1.0;
  double priority = 0.0;  // the sampled target
  bool clamped = false;   // tcc could not reproduce `priority`
};

struct RequestSplit {
  ChargingState parent;
  std::vector<SubRequest> parts;
  int clamped_count = 0;
};

/// Splits one request into n pseudonymous sub-requests. SoC shares are drawn
/// uniformly from what remains (on a 2^-40 grid), the last one closing the
/// sum exactly; each priority is drawn around the parent's, and TCC is
/// solved so that the pair reproduces it. When no TCC >= 1 can, the priority is redrawn up to
/// `max_resamples` times before TCC is clamped (t_max, or 1 when the SoC
/// term alone is too small) and the part is flagged.
RequestSplit split_request(const ChargingState& state, int n, const WeightConfig& w, const SplitConfig& cfg,
                           Rng& rng);

}  // namespace ppcc::coord
