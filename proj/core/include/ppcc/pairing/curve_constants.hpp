#pragma once

namespace ppcc::pairing {

struct CurveConstants {
  unsigned order_bits;
  const char* seed_label;
  const char* field_prime_hex;
  const char* order_hex;
  const char* cofactor_hex;
};

/// Frozen output of generate_type_a(order_bits, 512, seed_label); returns
/// nullptr for unsupported sizes.
const CurveConstants* find_curve_constants(unsigned order_bits);

}  // namespace ppcc::pairing
