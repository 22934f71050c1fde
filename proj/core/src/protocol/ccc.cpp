#include "ppcc/protocol/ccc.hpp"

#include <set>

#include "ppcc/common/error.hpp"

namespace ppcc::protocol {

using pairing::GroupParams;

pairing::CommonInfo token_common_info(Timestamp now, std::uint32_t community, int validity_days) {
  return {day_of(now) + validity_days, community};
}

std::pair<Msg1, PendingToken> esu_request_token(const GroupParams& g, EsuId id,
                                                const pairing::PlainKeyPair& identity, std::uint32_t community,
                                                const CcPublicInfo& cc, Timestamp now, Rng& rng) {
  PendingToken pending;
  pending.one_time = pairing::PlainKeyPair::generate(g, rng);
  pending.key = random_sym_key(rng);
  pending.body.one_time_pk = pending.one_time.y;
  pending.body.wrapped_key = wrap_key(g, pending.key, cc.kem_pub, rng);

  const auto c = token_common_info(now, community, cc.token_validity_days);
  auto blinded = pairing::blind(g, pending.body.message(g), c, cc.pbs_pub, rng);
  pending.blinding = blinded.state;

  Msg1 m;
  m.id = id;
  m.blinded = blinded.point;
  m.ts = now;
  m.sig = pairing::sign_plain(g, m.signed_bytes(g), identity);
  return {std::move(m), std::move(pending)};
}

OwnedToken esu_finish_token(const GroupParams& g, const Msg2& reply, PendingToken pending, const CcPublicInfo& cc) {
  OwnedToken t;
  t.token.body = std::move(pending.body);
  t.token.c = pending.blinding.c;
  t.token.sig = pairing::unblind(g, reply.signed_blinded, pending.blinding);
  if (!pairing::pbs_verify(g, t.token.body.message(g), t.token.c, t.token.sig, cc.pbs_pub)) {
    throw Error(Errc::bad_signature, "issued token does not verify");
  }
  t.key = pending.key;
  t.one_time = std::move(pending.one_time);
  return t;
}

Msg3 esu_build_msg3(const GroupParams& g, const OwnedToken& token, const RequestPayload& request, Timestamp now) {
  if (day_of(now) > token.token.c.expiry_day) throw Error(Errc::expired_token, "token past its expiry day");
  Msg3 m;
  m.token = token.token;
  Bytes ad = g.encode(token.one_time.y);
  m.payload = seal(token.key, SealDirection::request, request.encode(), ad);
  m.ts = now;
  m.sig = pairing::sign_plain(g, m.signed_bytes(g), token.one_time);
  return m;
}

SchedulePayload esu_read_schedule(const GroupParams& g, const Msg5& msg, const OwnedToken& token,
                                  const CcPublicInfo& cc) {
  if (!pairing::verify_plain(g, msg.signed_bytes(g), msg.sig, cc.sign_pub)) {
    throw Error(Errc::bad_signature, "schedule not signed by the CC");
  }
  for (const auto& e : msg.entries) {
    if (e.one_time_pk == token.one_time.y) {
      Bytes ad = g.encode(e.one_time_pk);
      return SchedulePayload::decode(open(token.key, SealDirection::schedule, e.sealed_schedule, ad));
    }
  }
  throw Error(Errc::entry_missing, "no schedule entry for this token");
}

ChargingController::ChargingController(pairing::GroupParamsPtr g, CcConfig cfg, Rng& rng)
    : g_(std::move(g)),
      cfg_(cfg),
      pbs_(pairing::PbsKeyPair::generate(*g_, rng)),
      kem_(KemKeyPair::generate(*g_, rng)),
      sign_(pairing::PlainKeyPair::generate(*g_, rng)) {
  cfg_.weights.validate();
}

CcPublicInfo ChargingController::public_info() const {
  return {pbs_.p_pub, kem_.y, sign_.y, cfg_.token_validity_days};
}

Msg2 ChargingController::issue_token(const Msg1& msg, Timestamp now) {
  auto it = roster_.find(msg.id);
  if (it == roster_.end()) throw Error(Errc::unknown_identity, "identity not on the roster");
  cfg_.freshness.check(msg.ts, now);
  const Bytes signed_part = msg.signed_bytes(*g_);
  if (!pairing::verify_plain(*g_, signed_part, msg.sig, it->second.identity_pub)) {
    throw Error(Errc::bad_signature, "token request signature");
  }

  // Anything older than the window is already rejected as stale.
  for (auto r = recent_msg1_.begin(); r != recent_msg1_.end();) {
    r = r->second < now - 2 * cfg_.freshness.skew_seconds ? recent_msg1_.erase(r) : std::next(r);
  }
  const Digest d = sha256(signed_part);
  if (!recent_msg1_.emplace(d, msg.ts).second) throw Error(Errc::replayed_message, "token request seen before");

  int& count = issued_[{msg.id, day_of(now)}];
  if (count >= cfg_.tokens_per_day) throw Error(Errc::token_quota_exceeded, "daily token quota reached");

  const auto c = token_common_info(now, it->second.community, cfg_.token_validity_days);
  Msg2 reply{pairing::pbs_sign(*g_, msg.blinded, c, pbs_)};
  ++count;
  return reply;
}

CcSlotResult ChargingController::process_msg4(const Msg4& msg, Timestamp now, double capacity_kw) {
  const auto& g = *g_;
  if (!aggregator_pub_ || !pairing::verify_plain(g, msg.signed_bytes(g), msg.sig, *aggregator_pub_)) {
    throw Error(Errc::bad_signature, "request batch not signed by the aggregator");
  }
  cfg_.freshness.check(msg.ts, now);
  if (msg.entries.empty()) throw Error(Errc::empty_list, "empty request batch");
  if (day_of(now) > msg.c.expiry_day) throw Error(Errc::expired_token, "tokens past their expiry day");

  std::vector<Bytes> messages;
  std::vector<Digest> hashes;
  std::set<Digest> batch;
  for (std::size_t i = 0; i < msg.entries.size(); ++i) {
    Token t{msg.entries[i].body, msg.c, {}};
    const Digest h = t.hash(g);
    if (registry_.contains(h) || !batch.insert(h).second) {
      throw Error(Errc::token_reuse, "token spent before: " + to_hex(h), static_cast<long>(i));
    }
    hashes.push_back(h);
    messages.push_back(msg.entries[i].body.message(g));
  }
  const pairing::AggregateSignature agg{msg.sigma_agg, msg.entries.size()};
  if (!pairing::verify_aggregate(g, messages, msg.c, agg, pbs_.p_pub)) {
    throw Error(Errc::aggregate_verification_failed, "aggregate token signature");
  }

  CcSlotResult out;
  std::vector<SymKey> keys;
  for (std::size_t i = 0; i < msg.entries.size(); ++i) {
    const auto& e = msg.entries[i];
    try {
      keys.push_back(unwrap_key(g, e.body.wrapped_key, kem_));
      Bytes ad = g.encode(e.body.one_time_pk);
      out.requests.push_back(RequestPayload::decode(open(keys.back(), SealDirection::request, e.payload, ad)));
    } catch (const Error& err) {
      throw Error(Errc::decrypt_failure, err.what(), static_cast<long>(i));
    }
    const auto& r = out.requests.back();
    coord::ChargingState st{r.soc, r.tcc, r.demand_kw};
    try {
      st.validate();
    } catch (const Error& err) {
      throw Error(Errc::invalid_argument, err.what(), static_cast<long>(i));
    }
    out.priorities.push_back({coord::priority(st, cfg_.weights), r.demand_kw});
  }

  out.schedule = coord::knapsack_schedule(out.priorities, capacity_kw);
  for (const auto& h : hashes) registry_.insert(h, msg.c.expiry_day);

  out.msg5.ts = now;
  for (std::size_t i = 0; i < msg.entries.size(); ++i) {
    SchedulePayload s{static_cast<std::uint8_t>(out.schedule.kind[i]), out.schedule.granted_kw[i]};
    Bytes ad = g.encode(msg.entries[i].body.one_time_pk);
    out.msg5.entries.push_back({msg.entries[i].body.one_time_pk, seal(keys[i], SealDirection::schedule, s.encode(), ad)});
  }
  out.msg5.sig = pairing::sign_plain(g, out.msg5.signed_bytes(g), sign_);
  return out;
}

Aggregator::Aggregator(pairing::GroupParamsPtr g, FreshnessPolicy freshness, Rng& rng)
    : g_(std::move(g)), freshness_(freshness), sign_(pairing::PlainKeyPair::generate(*g_, rng)) {}

Msg4 Aggregator::process(const std::vector<Msg3>& msgs, Timestamp now) {
  const auto& g = *g_;
  if (msgs.empty()) throw Error(Errc::empty_list, "no requests this slot");
  std::vector<pairing::PbsSignature> sigs;
  std::vector<Digest> hashes;
  std::set<Digest> batch;
  Msg4 out;
  out.c = msgs.front().token.c;
  for (std::size_t i = 0; i < msgs.size(); ++i) {
    const auto& m = msgs[i];
    const long idx = static_cast<long>(i);
    freshness_.check(m.ts, now, idx);
    if (!(m.token.c == out.c)) throw Error(Errc::mixed_common_info, "token common info differs", idx);
    if (!pairing::verify_plain(g, m.signed_bytes(g), m.sig, m.token.body.one_time_pk)) {
      throw Error(Errc::bad_token_signature, "one-time signature", idx);
    }
    const Digest h = m.token.hash(g);
    if (seen_.count(h) != 0 || !batch.insert(h).second) throw Error(Errc::token_reuse, "token already used", idx);
    hashes.push_back(h);
    sigs.push_back(m.token.sig);
    out.entries.push_back({m.token.body, m.payload});
  }
  for (const auto& h : hashes) seen_.emplace(h, out.c.expiry_day);
  for (auto it = seen_.begin(); it != seen_.end();) {
    it = it->second < day_of(now) ? seen_.erase(it) : std::next(it);
  }
  out.ts = now;
  out.sigma_agg = pairing::aggregate_signatures(g, sigs).sigma;
  out.sig = pairing::sign_plain(g, out.signed_bytes(g), sign_);
  return out;
}

}  // namespace ppcc::protocol
