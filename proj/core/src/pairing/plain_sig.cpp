#include "ppcc/pairing/plain_sig.hpp"

#include "ppcc/common/error.hpp"

namespace ppcc::pairing {

namespace {
const char* const kPlainTag = "ppcc/plain-sig/";

G1Point message_point(const GroupParams& g, ByteView message) {
  Bytes tag = to_bytes(kPlainTag);
  return g.hash_to_group(concat({tag, message}));
}
}  // namespace

PlainKeyPair PlainKeyPair::generate(const GroupParams& g, Rng& rng) { return from_secret(g, g.random_scalar(rng)); }

PlainKeyPair PlainKeyPair::from_secret(const GroupParams& g, const mpz_class& x) {
  if (sgn(x) <= 0 || x >= g.order()) throw Error(Errc::invalid_argument, "signing key out of range");
  return {x, g.mul_generator(x)};
}

PlainSignature sign_plain(const GroupParams& g, ByteView message, const PlainKeyPair& key) {
  return {g.mul(key.x, message_point(g, message))};
}

bool verify_plain(const GroupParams& g, ByteView message, const PlainSignature& sig, const G1Point& y) {
  if (sig.sigma.infinity || y.infinity) return false;
  std::pair<G1Point, G1Point> terms[2] = {{g.generator(), sig.sigma}, {g.neg(y), message_point(g, message)}};
  return g.pair_product(terms) == g.gt_one();
}

bool batch_verify(const GroupParams& g, const std::vector<BatchEntry>& entries) {
  if (entries.empty()) throw Error(Errc::empty_list, "empty batch");
  std::vector<G1Point> sigs;
  std::vector<std::pair<G1Point, G1Point>> terms;
  sigs.reserve(entries.size());
  terms.reserve(entries.size() + 1);
  for (const auto& e : entries) {
    if (e.sig.sigma.infinity || e.y.infinity) return false;
    sigs.push_back(e.sig.sigma);
    terms.emplace_back(g.neg(e.y), message_point(g, e.message));
  }
  terms.emplace_back(g.generator(), g.sum(sigs));
  return g.pair_product(terms) == g.gt_one();
}

}  // namespace ppcc::pairing
