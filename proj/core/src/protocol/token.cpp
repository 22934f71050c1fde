#include "ppcc/protocol/token.hpp"

#include "ppcc/common/error.hpp"

namespace ppcc::protocol {

void FreshnessPolicy::check(Timestamp ts, Timestamp now, long index) const {
  if (!fresh(ts, now)) throw Error(Errc::stale_timestamp, "timestamp outside the freshness window", index);
}

void TokenRegistry::insert(const Digest& h, std::int64_t expiry_day) {
  if (!spent_.emplace(h, expiry_day).second) throw Error(Errc::token_reuse, "token already spent");
}

std::size_t TokenRegistry::evict_expired(std::int64_t today) {
  std::size_t n = 0;
  for (auto it = spent_.begin(); it != spent_.end();) {
    if (it->second < today) {
      it = spent_.erase(it);
      ++n;
    } else {
      ++it;
    }
  }
  return n;
}

}  // namespace ppcc::protocol
