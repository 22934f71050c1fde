#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ppcc {

enum class Errc {
  // pairing-crypto
  unsupported_level,
  degenerate_common_info,
  empty_list,
  length_mismatch,
  invalid_encoding,
  // paillier-masking
  plaintext_overflow,
  key_generation_failed,
  empty_proxy_list,
  invalid_proxy,
  mixed_slot,
  // coordination-core
  invalid_argument,
  instance_too_large,
  // dcc-aggregation
  demand_overflow,
  aggregate_overflow,
  // protocol-engine
  unknown_identity,
  bad_signature,
  stale_timestamp,
  replayed_message,
  token_quota_exceeded,
  expired_token,
  mixed_common_info,
  bad_token_signature,
  aggregate_verification_failed,
  token_reuse,
  entry_missing,
  decrypt_failure,
  batch_verification_failed,
  malformed_frame,
  version_mismatch,
  inconsistent_broadcast,
  // attack-lab / sim-cli
  invalid_parameters,
  config_invalid,
  unknown_identifier,
};

std::string_view errc_name(Errc code) noexcept;

/// Exception carrying a machine-checkable error code. `index` names the
/// offending element of a batch when one exists (otherwise -1).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        index_(index) {}

  Errc code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  Errc code_;
  long index_;
};

}  // namespace ppcc
