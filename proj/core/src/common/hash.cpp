#include "ppcc/common/hash.hpp"

#include <sodium.h>

#include "ppcc/common/error.hpp"

namespace ppcc {

namespace {
void ensure_sodium() {
  static const bool ready = sodium_init() >= 0;
  if (!ready) throw std::runtime_error("libsodium initialisation failed");
}
}  // namespace

Digest sha256(ByteView data) {
  ensure_sodium();
  Digest out{};
  crypto_hash_sha256(out.data(), data.data(), data.size());
  return out;
}

Digest sha256_tagged(std::string_view tag, ByteView data) {
  ensure_sodium();
  crypto_hash_sha256_state st;
  crypto_hash_sha256_init(&st);
  crypto_hash_sha256_update(&st, reinterpret_cast<const unsigned char*>(tag.data()), tag.size());
  const unsigned char sep = 0;
  crypto_hash_sha256_update(&st, &sep, 1);
  crypto_hash_sha256_update(&st, data.data(), data.size());
  Digest out{};
  crypto_hash_sha256_final(&st, out.data());
  return out;
}

Bytes hash_expand(std::string_view tag, ByteView data, std::size_t out_len) {
  ensure_sodium();
  Bytes out;
  out.reserve(out_len + crypto_hash_sha512_BYTES);
  for (std::uint32_t counter = 0; out.size() < out_len; ++counter) {
    crypto_hash_sha512_state st;
    crypto_hash_sha512_init(&st);
    crypto_hash_sha512_update(&st, reinterpret_cast<const unsigned char*>(tag.data()), tag.size());
    unsigned char ctr[5] = {0, static_cast<unsigned char>(counter), static_cast<unsigned char>(counter >> 8),
                            static_cast<unsigned char>(counter >> 16), static_cast<unsigned char>(counter >> 24)};
    crypto_hash_sha512_update(&st, ctr, sizeof ctr);
    crypto_hash_sha512_update(&st, data.data(), data.size());
    unsigned char block[crypto_hash_sha512_BYTES];
    crypto_hash_sha512_final(&st, block);
    out.insert(out.end(), block, block + sizeof block);
  }
  out.resize(out_len);
  return out;
}

mpz_class hash_to_range(std::string_view tag, ByteView data, const mpz_class& modulus) {
  if (sgn(modulus) <= 0) throw Error(Errc::invalid_argument, "non-positive modulus");
  auto wide = hash_expand(tag, data, byte_width(modulus) + 16);
  mpz_class v = mpz_from_bytes(wide);
  return v % modulus;
}

}  // namespace ppcc
