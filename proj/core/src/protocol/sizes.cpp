#include "ppcc/protocol/sizes.hpp"

#include "ppcc/common/rng.hpp"
#include "ppcc/protocol/messages.hpp"
#include "ppcc/protocol/sym.hpp"

namespace ppcc::protocol {

WidthProfile WidthProfile::reference() { return {56, 56, 16, 16, 8, 56}; }

WidthProfile WidthProfile::implementation(const pairing::GroupParams& g) {
  const std::size_t req = RequestPayload{}.encode().size() + kSealOverhead;
  const std::size_t sched = SchedulePayload{}.encode().size() + kSealOverhead;
  return {g.point_bytes(), wrapped_key_bytes(g), req, sched, sizeof(Timestamp), g.point_bytes()};
}

PayloadSizes payload_sizes(const WidthProfile& w) {
  PayloadSizes s;
  const std::size_t token = w.point + w.wrapped_key;
  s.msg1 = w.point + w.timestamp + w.signature;                      // blinded token, TS, identity signature
  s.msg2 = w.point;                                                  // signed blinded token
  s.msg3 = token + w.point + w.request_ct + w.timestamp + w.signature;  // token, PBS, payload, TS, signature
  s.msg4_per_request = token + w.request_ct;
  s.msg4_fixed = w.point + w.signature;                              // aggregate PBS, aggregator signature
  s.msg5_per_request = w.schedule_ct;
  s.msg5_fixed = w.signature;
  return s;
}

FrameSizes measure_frames(const pairing::GroupParams& g, std::size_t n) {
  Rng rng(1);
  const pairing::G1Point p = g.random_point(rng);
  const Bytes wrapped(wrapped_key_bytes(g), 0xab);
  const Bytes req(RequestPayload{}.encode().size() + kSealOverhead, 0xcd);
  const Bytes sched(SchedulePayload{}.encode().size() + kSealOverhead, 0xef);

  Msg1 m1{7, p, 0, {p}};
  Msg2 m2{p};
  Msg3 m3{{{p, wrapped}, {}, {p}}, req, 0, {p}};
  Msg4 m4;
  m4.entries.assign(n, Msg4Entry{{p, wrapped}, req});
  m4.sigma_agg = p;
  m4.sig = {p};
  Msg5 m5;
  m5.entries.assign(n, Msg5Entry{p, sched});
  m5.sig = {p};

  FrameSizes f;
  f.msg1 = to_frame(g, MsgKind::msg1, m1).size();
  f.msg2 = to_frame(g, MsgKind::msg2, m2).size();
  f.msg3 = to_frame(g, MsgKind::msg3, m3).size();
  f.msg4 = to_frame(g, MsgKind::msg4, m4).size();
  f.msg5 = to_frame(g, MsgKind::msg5, m5).size();
  return f;
}

}  // namespace ppcc::protocol
