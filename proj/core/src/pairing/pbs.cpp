#include "ppcc/pairing/pbs.hpp"

#include "ppcc/common/error.hpp"

namespace ppcc::pairing {

PbsKeyPair PbsKeyPair::generate(const GroupParams& g, Rng& rng) { return from_secret(g, g.random_scalar(rng)); }

PbsKeyPair PbsKeyPair::from_secret(const GroupParams& g, const mpz_class& d) {
  if (sgn(d) <= 0 || d >= g.order()) throw Error(Errc::invalid_argument, "signing key out of range");
  return {d, g.mul_generator(d)};
}

Bytes CommonInfo::encode() const {
  ByteWriter w;
  w.i64(expiry_day);
  w.u32(community);
  return std::move(w).take();
}

CommonInfo CommonInfo::decode(ByteView data) {
  if (data.size() != kEncodedSize) throw Error(Errc::invalid_encoding, "common info must be 12 bytes");
  ByteReader r(data);
  CommonInfo c;
  c.expiry_day = r.i64();
  c.community = r.u32();
  return c;
}

G1Point pbs_verification_base(const GroupParams& g, const CommonInfo& c, const G1Point& p_pub) {
  return g.add(g.mul_generator(g.hash_to_scalar(c.encode())), p_pub);
}

G1Point pbs_message_point(const GroupParams& g, ByteView message, const CommonInfo& c) {
  Bytes enc = c.encode();
  return g.hash_to_group(concat({message, enc}));
}

Blinded blind(const GroupParams& g, ByteView message, const CommonInfo& c, const G1Point& p_pub, Rng& rng) {
  mpz_class r = g.random_scalar(rng);  // in [1, q-1]
  G1Point offset = g.mul(r, pbs_verification_base(g, c, p_pub));
  return {g.add(pbs_message_point(g, message, c), offset), {r, c}};
}

G1Point pbs_sign(const GroupParams& g, const G1Point& blinded, const CommonInfo& c, const PbsKeyPair& key) {
  mpz_class k = (g.hash_to_scalar(c.encode()) + key.d) % g.order();
  mpz_class inv;
  if (sgn(k) == 0 || mpz_invert(inv.get_mpz_t(), k.get_mpz_t(), g.order().get_mpz_t()) == 0) {
    throw Error(Errc::degenerate_common_info, "H(c) + d vanishes modulo the group order");
  }
  return g.mul(inv, blinded);
}

PbsSignature unblind(const GroupParams& g, const G1Point& signed_blinded, const BlindingState& state) {
  return {g.sub(signed_blinded, g.mul_generator(state.r))};
}

bool pbs_verify(const GroupParams& g, ByteView message, const CommonInfo& c, const PbsSignature& sig,
                const G1Point& p_pub) {
  if (sig.sigma.infinity) return false;
  return g.pair(pbs_verification_base(g, c, p_pub), sig.sigma) ==
         g.pair(g.generator(), pbs_message_point(g, message, c));
}

AggregateSignature aggregate_signatures(const GroupParams& g, const std::vector<PbsSignature>& sigs) {
  if (sigs.empty()) throw Error(Errc::empty_list, "nothing to aggregate");
  std::vector<G1Point> pts;
  pts.reserve(sigs.size());
  for (const auto& s : sigs) pts.push_back(s.sigma);
  return {g.sum(pts), sigs.size()};
}

bool verify_aggregate(const GroupParams& g, const std::vector<Bytes>& messages, const CommonInfo& c,
                      const AggregateSignature& agg, const G1Point& p_pub) {
  if (messages.size() != agg.count) throw Error(Errc::length_mismatch, "message count differs from aggregate");
  std::vector<G1Point> hashed;
  hashed.reserve(messages.size());
  for (const auto& m : messages) hashed.push_back(pbs_message_point(g, m, c));
  // e(base, sigma_agg) * e(-P, sum H0) == 1 with one final exponentiation.
  std::pair<G1Point, G1Point> terms[2] = {{pbs_verification_base(g, c, p_pub), agg.sigma},
                                          {g.neg(g.generator()), g.sum(hashed)}};
  return g.pair_product(terms) == g.gt_one();
}

}  // namespace ppcc::pairing
