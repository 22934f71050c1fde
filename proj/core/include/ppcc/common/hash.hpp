#pragma once

#include <array>
#include <cstdint>

#include <gmpxx.h>

#include "ppcc/common/bytes.hpp"

namespace ppcc {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteView data);
/// Domain-separated SHA-256: H(tag || 0x00 || data).
Digest sha256_tagged(std::string_view tag, ByteView data);

/// Counter-mode SHA-512 expansion to `out_len` bytes.
Bytes hash_expand(std::string_view tag, ByteView data, std::size_t out_len);

/// Hash to an integer in [0, modulus) with 128 bits of extra width so the
/// reduction bias is negligible.
mpz_class hash_to_range(std::string_view tag, ByteView data, const mpz_class& modulus);

}  // namespace ppcc
