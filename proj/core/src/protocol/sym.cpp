#include "ppcc/protocol/sym.hpp"

#include <algorithm>

#include <sodium.h>

#include "ppcc/common/error.hpp"
#include "ppcc/common/hash.hpp"

namespace ppcc::protocol {

namespace {

std::array<unsigned char, crypto_aead_chacha20poly1305_IETF_NPUBBYTES> nonce_for(SealDirection dir) {
  std::array<unsigned char, crypto_aead_chacha20poly1305_IETF_NPUBBYTES> n{};
  n[0] = static_cast<unsigned char>(dir);
  return n;
}

SymKey kem_key(const pairing::GroupParams& g, const pairing::G1Point& shared, ByteView r_enc) {
  Bytes s = g.encode(shared);
  Digest d = sha256_tagged("ppcc/kem", concat({r_enc, s}));
  SymKey k;
  std::copy(d.begin(), d.end(), k.begin());
  return k;
}

}  // namespace

SymKey random_sym_key(Rng& rng) {
  Bytes b = rng.bytes(32);
  SymKey k;
  std::copy(b.begin(), b.end(), k.begin());
  return k;
}

Bytes seal(const SymKey& key, SealDirection dir, ByteView plaintext, ByteView associated) {
  if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
  Bytes out(plaintext.size() + kSealOverhead);
  unsigned long long len = 0;
  auto nonce = nonce_for(dir);
  crypto_aead_chacha20poly1305_ietf_encrypt(out.data(), &len, plaintext.data(), plaintext.size(),
                                            associated.data(), associated.size(), nullptr, nonce.data(),
                                            key.data());
  out.resize(len);
  return out;
}

Bytes open(const SymKey& key, SealDirection dir, ByteView sealed, ByteView associated) {
  if (sodium_init() < 0) throw std::runtime_error("libsodium initialisation failed");
  if (sealed.size() < kSealOverhead) throw Error(Errc::decrypt_failure, "sealed box too short");
  Bytes out(sealed.size() - kSealOverhead);
  unsigned long long len = 0;
  auto nonce = nonce_for(dir);
  if (crypto_aead_chacha20poly1305_ietf_decrypt(out.data(), &len, nullptr, sealed.data(), sealed.size(),
                                                associated.data(), associated.size(), nonce.data(),
                                                key.data()) != 0) {
    throw Error(Errc::decrypt_failure, "authentication failed");
  }
  out.resize(len);
  return out;
}

KemKeyPair KemKeyPair::generate(const pairing::GroupParams& g, Rng& rng) {
  mpz_class x = g.random_scalar(rng);
  return {x, g.mul_generator(x)};
}

std::size_t wrapped_key_bytes(const pairing::GroupParams& g) { return g.point_bytes() + 32 + kSealOverhead; }

Bytes wrap_key(const pairing::GroupParams& g, const SymKey& k, const pairing::G1Point& kem_pub, Rng& rng) {
  mpz_class r = g.random_scalar(rng);
  Bytes r_enc = g.encode(g.mul_generator(r));
  SymKey kek = kem_key(g, g.mul(r, kem_pub), r_enc);
  Bytes boxed = seal(kek, SealDirection::request, k, r_enc);
  return concat({r_enc, boxed});
}

SymKey unwrap_key(const pairing::GroupParams& g, ByteView wrapped, const KemKeyPair& kem) {
  if (wrapped.size() != wrapped_key_bytes(g)) throw Error(Errc::invalid_encoding, "wrapped key width");
  ByteView r_enc = wrapped.first(g.point_bytes());
  pairing::G1Point r = g.decode(r_enc);
  SymKey kek = kem_key(g, g.mul(kem.x, r), r_enc);
  Bytes k = open(kek, SealDirection::request, wrapped.subspan(g.point_bytes()), r_enc);
  if (k.size() != 32) throw Error(Errc::decrypt_failure, "wrapped key length");
  SymKey out;
  std::copy(k.begin(), k.end(), out.begin());
  return out;
}

}  // namespace ppcc::protocol
