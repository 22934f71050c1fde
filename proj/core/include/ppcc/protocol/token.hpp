#pragma once

#include <cstdint>
#include <map>

#include "ppcc/common/hash.hpp"
#include "ppcc/protocol/messages.hpp"

namespace ppcc::protocol {

inline constexpr std::int64_t kSecondsPerDay = 86400;

inline std::int64_t day_of(Timestamp ts) {
  return ts >= 0 ? ts / kSecondsPerDay : -((-ts + kSecondsPerDay - 1) / kSecondsPerDay);
}

struct FreshnessPolicy {
  std::int64_t skew_seconds = 30;
  std::int64_t slot_seconds = 3600;

  bool fresh(Timestamp ts, Timestamp now) const { return ts >= now - skew_seconds && ts <= now + skew_seconds; }
  /// Throws stale_timestamp (with `index` for batches).
  void check(Timestamp ts, Timestamp now, long index = -1) const;
};

/// Hashes of spent tokens, each kept until its expiry day has passed.
class TokenRegistry {
 public:
  bool contains(const Digest& h) const { return spent_.count(h) != 0; }
  /// Throws token_reuse if the hash is already present.
  void insert(const Digest& h, std::int64_t expiry_day);
  /// Drops tokens whose expiry day is before `today`; returns how many.
  std::size_t evict_expired(std::int64_t today);
  std::size_t size() const { return spent_.size(); }

 private:
  std::map<Digest, std::int64_t> spent_;
};

}  // namespace ppcc::protocol
