#include "ppcc/protocol/messages.hpp"

#include "ppcc/common/error.hpp"

namespace ppcc::protocol {

namespace {

using pairing::G1Point;
using pairing::GroupParams;

void put_point(ByteWriter& w, const GroupParams& g, const G1Point& p) { w.raw(g.encode(p)); }

G1Point get_point(ByteReader& r, const GroupParams& g) { return g.decode(r.raw(g.point_bytes())); }

void put_common(ByteWriter& w, const pairing::CommonInfo& c) { w.raw(c.encode()); }

pairing::CommonInfo get_common(ByteReader& r) {
  return pairing::CommonInfo::decode(r.raw(pairing::CommonInfo::kEncodedSize));
}

void put_slot(ByteWriter& w, const paillier::SlotId& s) {
  w.i64(s.day);
  w.u32(s.sn);
}

paillier::SlotId get_slot(ByteReader& r) {
  paillier::SlotId s;
  s.day = r.i64();
  s.sn = r.u32();
  return s;
}

void put_token_body(ByteWriter& w, const GroupParams& g, const TokenBody& b) {
  put_point(w, g, b.one_time_pk);
  w.blob(b.wrapped_key);
}

TokenBody get_token_body(ByteReader& r, const GroupParams& g) {
  TokenBody b;
  b.one_time_pk = get_point(r, g);
  b.wrapped_key = r.blob();
  return b;
}

std::size_t level_width(std::uint32_t bits) { return (bits + 7) / 8; }

// Element-level decoding errors surface as frame errors.
template <typename F>
auto framed(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_encoding) throw Error(Errc::malformed_frame, e.what());
    throw;
  }
}

// Signed portions, prefixed by a per-message label.
ByteWriter labelled(std::string_view label) {
  ByteWriter w;
  w.raw(to_bytes(label));
  return w;
}

void write_msg3_unsigned(ByteWriter& w, const GroupParams& g, const Msg3& m) {
  put_token_body(w, g, m.token.body);
  put_common(w, m.token.c);
  put_point(w, g, m.token.sig.sigma);
  w.blob(m.payload);
  w.i64(m.ts);
}

void write_msg4_unsigned(ByteWriter& w, const GroupParams& g, const Msg4& m) {
  put_common(w, m.c);
  w.i64(m.ts);
  w.u32(static_cast<std::uint32_t>(m.entries.size()));
  for (const auto& e : m.entries) {
    put_token_body(w, g, e.body);
    w.blob(e.payload);
  }
  put_point(w, g, m.sigma_agg);
}

void write_msg5_unsigned(ByteWriter& w, const GroupParams& g, const Msg5& m) {
  w.i64(m.ts);
  w.u32(static_cast<std::uint32_t>(m.entries.size()));
  for (const auto& e : m.entries) {
    put_point(w, g, e.one_time_pk);
    w.blob(e.sealed_schedule);
  }
}

void write_report_unsigned(ByteWriter& w, const DccReport& m) {
  w.u32(m.id);
  w.u32(m.node);
  put_slot(w, m.slot);
  w.blob(m.ciphertext);
  w.i64(m.ts);
}

void write_broadcast_unsigned(ByteWriter& w, const DccBroadcast& m) {
  w.u32(m.node);
  put_slot(w, m.slot);
  w.u32(m.level_bits);
  w.u32(static_cast<std::uint32_t>(m.totals.size()));
  for (const auto& t : m.totals) w.raw(mpz_to_bytes(t, level_width(m.level_bits)));
  w.i64(m.ts);
}

}  // namespace

Bytes TokenBody::message(const GroupParams& g) const { return concat({g.encode(one_time_pk), wrapped_key}); }

Digest Token::hash(const GroupParams& g) const {
  Bytes m = body.message(g);
  Bytes ce = c.encode();
  return sha256_tagged("ppcc/token", concat({m, ce}));
}

Bytes Msg1::signed_bytes(const GroupParams& g) const {
  ByteWriter w = labelled("ppcc/msg1");
  w.u32(id);
  put_point(w, g, blinded);
  w.i64(ts);
  return std::move(w).take();
}

Bytes Msg3::signed_bytes(const GroupParams& g) const {
  ByteWriter w = labelled("ppcc/msg3");
  write_msg3_unsigned(w, g, *this);
  return std::move(w).take();
}

Bytes Msg4::signed_bytes(const GroupParams& g) const {
  ByteWriter w = labelled("ppcc/msg4");
  write_msg4_unsigned(w, g, *this);
  return std::move(w).take();
}

Bytes Msg5::signed_bytes(const GroupParams& g) const {
  ByteWriter w = labelled("ppcc/msg5");
  write_msg5_unsigned(w, g, *this);
  return std::move(w).take();
}

Bytes DccReport::signed_bytes() const {
  ByteWriter w = labelled("ppcc/dcc-report");
  write_report_unsigned(w, *this);
  return std::move(w).take();
}

Bytes DccBroadcast::signed_bytes(const GroupParams&) const {
  ByteWriter w = labelled("ppcc/dcc-broadcast");
  write_broadcast_unsigned(w, *this);
  return std::move(w).take();
}

Bytes RequestPayload::encode() const {
  ByteWriter w;
  w.f64(soc);
  w.f64(tcc);
  w.f64(demand_kw);
  return std::move(w).take();
}

RequestPayload RequestPayload::decode(ByteView data) {
  ByteReader r(data);
  RequestPayload p;
  p.soc = r.f64();
  p.tcc = r.f64();
  p.demand_kw = r.f64();
  r.expect_done();
  return p;
}

Bytes SchedulePayload::encode() const {
  ByteWriter w;
  w.u8(kind);
  w.f64(granted_kw);
  return std::move(w).take();
}

SchedulePayload SchedulePayload::decode(ByteView data) {
  ByteReader r(data);
  SchedulePayload p;
  p.kind = r.u8();
  p.granted_kw = r.f64();
  r.expect_done();
  return p;
}

Bytes encode_body(const GroupParams& g, const Msg1& m) {
  ByteWriter w;
  w.u32(m.id);
  put_point(w, g, m.blinded);
  w.i64(m.ts);
  put_point(w, g, m.sig.sigma);
  return std::move(w).take();
}

Bytes encode_body(const GroupParams& g, const Msg2& m) {
  ByteWriter w;
  put_point(w, g, m.signed_blinded);
  return std::move(w).take();
}

Bytes encode_body(const GroupParams& g, const Msg3& m) {
  ByteWriter w;
  write_msg3_unsigned(w, g, m);
  put_point(w, g, m.sig.sigma);
  return std::move(w).take();
}

Bytes encode_body(const GroupParams& g, const Msg4& m) {
  ByteWriter w;
  write_msg4_unsigned(w, g, m);
  put_point(w, g, m.sig.sigma);
  return std::move(w).take();
}

Bytes encode_body(const GroupParams& g, const Msg5& m) {
  ByteWriter w;
  write_msg5_unsigned(w, g, m);
  put_point(w, g, m.sig.sigma);
  return std::move(w).take();
}

Bytes encode_body(const GroupParams& g, const DccReport& m) {
  ByteWriter w;
  write_report_unsigned(w, m);
  put_point(w, g, m.sig.sigma);
  return std::move(w).take();
}

Bytes encode_body(const GroupParams& g, const DccBroadcast& m) {
  ByteWriter w;
  write_broadcast_unsigned(w, m);
  put_point(w, g, m.sig.sigma);
  return std::move(w).take();
}

Msg1 decode_msg1(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    Msg1 m;
    m.id = r.u32();
    m.blinded = get_point(r, g);
    m.ts = r.i64();
    m.sig.sigma = get_point(r, g);
    r.expect_done();
    return m;
  });
}

Msg2 decode_msg2(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    Msg2 m;
    m.signed_blinded = get_point(r, g);
    r.expect_done();
    return m;
  });
}

Msg3 decode_msg3(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    Msg3 m;
    m.token.body = get_token_body(r, g);
    m.token.c = get_common(r);
    m.token.sig.sigma = get_point(r, g);
    m.payload = r.blob();
    m.ts = r.i64();
    m.sig.sigma = get_point(r, g);
    r.expect_done();
    return m;
  });
}

Msg4 decode_msg4(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    Msg4 m;
    m.c = get_common(r);
    m.ts = r.i64();
    const std::uint32_t n = r.u32();
    // Each entry needs at least a point and two length prefixes.
    if (n > r.remaining() / (g.point_bytes() + 8)) throw Error(Errc::malformed_frame, "entry count too large");
    m.entries.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      Msg4Entry e;
      e.body = get_token_body(r, g);
      e.payload = r.blob();
      m.entries.push_back(std::move(e));
    }
    m.sigma_agg = get_point(r, g);
    m.sig.sigma = get_point(r, g);
    r.expect_done();
    return m;
  });
}

Msg5 decode_msg5(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    Msg5 m;
    m.ts = r.i64();
    const std::uint32_t n = r.u32();
    if (n > r.remaining() / (g.point_bytes() + 4)) throw Error(Errc::malformed_frame, "entry count too large");
    m.entries.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      Msg5Entry e;
      e.one_time_pk = get_point(r, g);
      e.sealed_schedule = r.blob();
      m.entries.push_back(std::move(e));
    }
    m.sig.sigma = get_point(r, g);
    r.expect_done();
    return m;
  });
}

DccReport decode_dcc_report(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    DccReport m;
    m.id = r.u32();
    m.node = r.u32();
    m.slot = get_slot(r);
    m.ciphertext = r.blob();
    m.ts = r.i64();
    m.sig.sigma = get_point(r, g);
    r.expect_done();
    return m;
  });
}

DccBroadcast decode_dcc_broadcast(const GroupParams& g, ByteView body) {
  return framed([&] {
    ByteReader r(body);
    DccBroadcast m;
    m.node = r.u32();
    m.slot = get_slot(r);
    m.level_bits = r.u32();
    if (m.level_bits == 0) throw Error(Errc::malformed_frame, "zero level width");
    const std::uint32_t n = r.u32();
    const std::size_t width = level_width(m.level_bits);
    if (n > r.remaining() / width) throw Error(Errc::malformed_frame, "level count too large");
    m.totals.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) m.totals.push_back(mpz_from_bytes(r.raw(width)));
    m.ts = r.i64();
    m.sig.sigma = get_point(r, g);
    r.expect_done();
    return m;
  });
}

Bytes encode_frame(MsgKind kind, ByteView body) {
  ByteWriter w;
  w.u8(kWireVersion);
  w.u8(static_cast<std::uint8_t>(kind));
  w.u32(static_cast<std::uint32_t>(body.size()));
  w.raw(body);
  return std::move(w).take();
}

Frame decode_frame(ByteView data) {
  ByteReader r(data);
  const std::uint8_t version = r.u8();
  if (version != kWireVersion) throw Error(Errc::version_mismatch, "unsupported wire version " + std::to_string(version));
  const std::uint8_t kind = r.u8();
  if (kind < 1 || kind > 7) throw Error(Errc::malformed_frame, "unknown message kind");
  const std::uint32_t len = r.u32();
  Bytes body = r.raw(len);
  r.expect_done();
  return {static_cast<MsgKind>(kind), std::move(body)};
}

}  // namespace ppcc::protocol
