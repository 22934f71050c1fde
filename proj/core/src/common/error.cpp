#include "ppcc/common/error.hpp"

namespace ppcc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::unsupported_level: return "unsupported-level";
    case Errc::degenerate_common_info: return "degenerate-common-info";
    case Errc::empty_list: return "empty-list";
    case Errc::length_mismatch: return "length-mismatch";
    case Errc::invalid_encoding: return "invalid-encoding";
    case Errc::plaintext_overflow: return "plaintext-overflow";
    case Errc::key_generation_failed: return "key-generation-failed";
    case Errc::empty_proxy_list: return "empty-proxy-list";
    case Errc::invalid_proxy: return "invalid-proxy";
    case Errc::mixed_slot: return "mixed-slot";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::instance_too_large: return "instance-too-large";
    case Errc::demand_overflow: return "demand-overflow";
    case Errc::aggregate_overflow: return "aggregate-overflow";
    case Errc::unknown_identity: return "unknown-identity";
    case Errc::bad_signature: return "bad-signature";
    case Errc::stale_timestamp: return "stale-timestamp";
    case Errc::replayed_message: return "replayed-message";
    case Errc::token_quota_exceeded: return "token-quota-exceeded";
    case Errc::expired_token: return "expired-token";
    case Errc::mixed_common_info: return "mixed-common-info";
    case Errc::bad_token_signature: return "bad-token-signature";
    case Errc::aggregate_verification_failed: return "aggregate-verification-failed";
    case Errc::token_reuse: return "token-reuse";
    case Errc::entry_missing: return "entry-missing";
    case Errc::decrypt_failure: return "decrypt-failure";
    case Errc::batch_verification_failed: return "batch-verification-failed";
    case Errc::malformed_frame: return "malformed-frame";
    case Errc::version_mismatch: return "version-mismatch";
    case Errc::inconsistent_broadcast: return "inconsistent-broadcast";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::config_invalid: return "config-invalid";
    case Errc::unknown_identifier: return "unknown-identifier";
  }
  return "unknown-error";
}

}  // namespace ppcc
