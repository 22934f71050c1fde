#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppcc/pairing/group.hpp"

namespace ppcc::protocol {

/// Byte widths of the field types the message inventories are built from.
struct WidthProfile {
  std::size_t point = 0;        // G1 element: one-time key, blinded token, PBS
  std::size_t wrapped_key = 0;  // symmetric key encrypted to the CC
  std::size_t request_ct = 0;   // sealed (S, T) payload
  std::size_t schedule_ct = 0;  // sealed (y, p) entry
  std::size_t timestamp = 0;
  std::size_t signature = 0;

  /// 224-bit group elements, 128-bit symmetric ciphertexts.
  static WidthProfile reference();
  /// What this implementation puts on the wire.
  static WidthProfile implementation(const pairing::GroupParams& g);
};

/// Itemised payload sizes: the cryptographic fields of each message, not
/// counting identifiers, common information, length prefixes or framing.
struct PayloadSizes {
  std::size_t msg1 = 0;
  std::size_t msg2 = 0;
  std::size_t msg3 = 0;
  std::size_t msg4_per_request = 0;
  std::size_t msg4_fixed = 0;
  std::size_t msg5_per_request = 0;
  std::size_t msg5_fixed = 0;

  std::size_t msg4(std::size_t n) const { return msg4_per_request * n + msg4_fixed; }
  std::size_t msg5(std::size_t n) const { return msg5_per_request * n + msg5_fixed; }
};

PayloadSizes payload_sizes(const WidthProfile& w);

/// Serialized frame sizes of real messages with n requests (Msg4, Msg5).
struct FrameSizes {
  std::size_t msg1 = 0, msg2 = 0, msg3 = 0, msg4 = 0, msg5 = 0;
};

FrameSizes measure_frames(const pairing::GroupParams& g, std::size_t n);

}  // namespace ppcc::protocol
