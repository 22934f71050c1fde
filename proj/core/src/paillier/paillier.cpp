#include "ppcc/paillier/paillier.hpp"

#include <algorithm>

#include "ppcc/common/error.hpp"
#include "ppcc/common/hash.hpp"

namespace ppcc::paillier {

namespace {

constexpr int kMaxKeygenAttempts = 64;

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// L(x) = (x - 1) / N
mpz_class ell(const mpz_class& x, const mpz_class& n) {
  mpz_class r = x - 1;
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

mpz_class random_prime(unsigned bits, Rng& rng) {
  mpz_class c = rng.exact_bits(bits);
  mpz_setbit(c.get_mpz_t(), bits - 2);  // top two bits set: p*q has exactly 2*bits bits
  mpz_nextprime(c.get_mpz_t(), c.get_mpz_t());
  return c;
}

// g^m for g = 1 + N is 1 + m*N mod N^2.
mpz_class g_pow(const mpz_class& m, const PublicKey& pk) {
  mpz_class r = m * pk.n + 1;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), pk.n2.get_mpz_t());
  return r;
}

void check_plaintext(const mpz_class& m, const PublicKey& pk) {
  if (sgn(m) < 0 || m >= pk.n) throw Error(Errc::plaintext_overflow, "plaintext outside [0, N)");
}

}  // namespace

PublicKey PublicKey::from_modulus(const mpz_class& n) { return {n, n * n, n + 1}; }

KeyPair keygen(unsigned bits, Rng& rng, std::stop_token stop) {
  if (bits < 32 || bits % 2 != 0) throw Error(Errc::invalid_argument, "modulus size must be even and >= 32");
  for (int attempt = 0; attempt < kMaxKeygenAttempts; ++attempt) {
    if (stop.stop_requested()) break;
    mpz_class p = random_prime(bits / 2, rng);
    mpz_class q = random_prime(bits / 2, rng);
    if (p == q) continue;
    mpz_class n = p * q;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) != bits) continue;
    mpz_class pm = p - 1, qm = q - 1, phi = pm * qm, g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), phi.get_mpz_t());
    if (g != 1) continue;
    KeyPair k;
    k.pk = PublicKey::from_modulus(n);
    k.p = p;
    k.q = q;
    mpz_lcm(k.delta.get_mpz_t(), pm.get_mpz_t(), qm.get_mpz_t());
    mpz_class l = ell(powm(k.pk.g, k.delta, k.pk.n2), n);
    if (mpz_invert(k.mu.get_mpz_t(), l.get_mpz_t(), n.get_mpz_t()) == 0) continue;
    return k;
  }
  throw Error(Errc::key_generation_failed, "no usable primes found");
}

mpz_class encrypt_with(const mpz_class& m, const mpz_class& r, const PublicKey& pk) {
  check_plaintext(m, pk);
  mpz_class c = g_pow(m, pk) * powm(r, pk.n, pk.n2);
  mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pk.n2.get_mpz_t());
  return c;
}

mpz_class encrypt(const mpz_class& m, const PublicKey& pk, Rng& rng) {
  check_plaintext(m, pk);
  mpz_class r, g;
  do {
    r = rng.below(pk.n - 1) + 1;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t());
  } while (g != 1);
  return encrypt_with(m, r, pk);
}

mpz_class decrypt(const mpz_class& c, const KeyPair& sk) {
  const auto& pk = sk.pk;
  if (sgn(c) <= 0 || c >= pk.n2) throw Error(Errc::decrypt_failure, "ciphertext outside Z_{N^2}");
  mpz_class m = ell(powm(c, sk.delta, pk.n2), pk.n) * sk.mu;
  mpz_mod(m.get_mpz_t(), m.get_mpz_t(), pk.n.get_mpz_t());
  return m;
}

mpz_class add(const mpz_class& a, const mpz_class& b, const PublicKey& pk) {
  mpz_class c = a * b;
  mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pk.n2.get_mpz_t());
  return c;
}

Bytes encode_ciphertext(const mpz_class& c, const PublicKey& pk) { return mpz_to_bytes(c, pk.ciphertext_bytes()); }

mpz_class decode_ciphertext(ByteView data, const PublicKey& pk) {
  if (data.size() != pk.ciphertext_bytes()) throw Error(Errc::invalid_encoding, "ciphertext width mismatch");
  mpz_class c = mpz_from_bytes(data);
  if (c >= pk.n2) throw Error(Errc::invalid_encoding, "ciphertext not reduced");
  return c;
}

Bytes SlotId::encode() const {
  ByteWriter w;
  w.i64(day);
  w.u32(sn);
  return std::move(w).take();
}

SlotRandomizer derive_slot_randomizer(const SlotId& slot, const PublicKey& pk) {
  mpz_class r = hash_to_range("ppcc/slot-randomizer", slot.encode(), pk.n2);
  mpz_class g;
  for (;;) {
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), pk.n.get_mpz_t());
    if (sgn(r) != 0 && g == 1) break;
    r += 1;
    if (r >= pk.n2) r = 1;
  }
  return {slot, r};
}

MaskShareSet generate_mask_shares(PartyId owner, const std::vector<PartyId>& proxies, Rng& rng,
                                  const mpz_class& phi) {
  if (proxies.empty()) throw Error(Errc::empty_proxy_list, "a mask needs at least one proxy");
  if (sgn(phi) <= 0) throw Error(Errc::invalid_argument, "mask modulus must be positive");
  MaskShareSet set{owner, {}, 0};
  for (std::size_t i = 0; i < proxies.size(); ++i) {
    if (proxies[i] == owner) throw Error(Errc::invalid_proxy, "owner cannot proxy itself", static_cast<long>(i));
    mpz_class s = rng.below(phi);
    set.own_mask += s;
    set.shares.push_back({proxies[i], s});
  }
  return set;
}

mpz_class net_mask(const MaskShareSet& own, const std::vector<mpz_class>& held_for_others) {
  mpz_class net = own.own_mask;
  for (const auto& s : held_for_others) net -= s;
  return net;
}

MaskedCiphertext masked_encrypt(const mpz_class& m, const SlotRandomizer& r, const mpz_class& s_net,
                                const PublicKey& pk) {
  check_plaintext(m, pk);
  mpz_class c = g_pow(m, pk) * powm(r.r, pk.n + s_net, pk.n2);
  mpz_mod(c.get_mpz_t(), c.get_mpz_t(), pk.n2.get_mpz_t());
  return {c, r.slot};
}

mpz_class aggregate_and_decrypt(const std::vector<MaskedCiphertext>& cts, const KeyPair& sk) {
  if (cts.empty()) throw Error(Errc::empty_list, "no ciphertexts");
  mpz_class acc = 1;
  for (std::size_t i = 0; i < cts.size(); ++i) {
    if (!(cts[i].slot == cts[0].slot)) throw Error(Errc::mixed_slot, "ciphertexts from different slots", static_cast<long>(i));
    acc = add(acc, cts[i].c, sk.pk);
  }
  return decrypt(acc, sk);
}

}  // namespace ppcc::paillier
