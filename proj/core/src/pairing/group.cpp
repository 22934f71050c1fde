#include "ppcc/pairing/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "ppcc/common/error.hpp"
#include "ppcc/common/hash.hpp"
#include "ppcc/pairing/curve_constants.hpp"

namespace ppcc::pairing {

namespace {

std::uint64_t seed_from_label(std::string_view label) {
  auto d = sha256_tagged("ppcc/type-a-seed", to_bytes(label));
  std::uint64_t s = 0;
  for (int i = 0; i < 8; ++i) s |= std::uint64_t{d[i]} << (8 * i);
  return s;
}

bool is_prime(const mpz_class& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

}  // namespace

TypeACurve generate_type_a(unsigned order_bits, unsigned field_bits, std::string_view seed_label) {
  if (order_bits < 16 || field_bits <= order_bits + 2) {
    throw Error(Errc::invalid_argument, "type-A sizes out of range");
  }
  Rng rng(seed_from_label(seed_label));
  TypeACurve c;
  for (;;) {
    mpz_class r = rng.exact_bits(order_bits);
    mpz_nextprime(r.get_mpz_t(), r.get_mpz_t());
    if (mpz_sizeinbase(r.get_mpz_t(), 2) == order_bits) {
      c.order = r;
      break;
    }
  }
  const unsigned cofactor_bits = field_bits - order_bits;
  for (;;) {
    mpz_class h = rng.exact_bits(cofactor_bits);
    h -= h % 4;  // h = 0 (mod 4) makes p = h*q - 1 = 3 (mod 4)
    mpz_class p = h * c.order - 1;
    if (mpz_sizeinbase(p.get_mpz_t(), 2) != field_bits) continue;
    if (!is_prime(p)) continue;
    c.cofactor = h;
    c.field_prime = p;
    return c;
  }
}

GroupParams::GroupParams(TypeACurve curve) : curve_(std::move(curve)) {
  const auto& p = curve_.field_prime;
  if (p % 4 != 3 || curve_.cofactor * curve_.order != p + 1) {
    throw Error(Errc::invalid_argument, "inconsistent type-A constants");
  }
  sqrt_exponent_ = (p + 1) / 4;
  field_bytes_ = byte_width(p);
  scalar_bytes_ = byte_width(curve_.order);
  generator_ = hash_to_group(to_bytes("ppcc/generator"));
  build_comb();
}

unsigned GroupParams::order_bits() const {
  return static_cast<unsigned>(mpz_sizeinbase(curve_.order.get_mpz_t(), 2));
}

mpz_class GroupParams::reduce(const mpz_class& v) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v.get_mpz_t(), curve_.field_prime.get_mpz_t());
  return r;
}

G1Point GroupParams::neg(const G1Point& a) const {
  if (a.infinity) return a;
  G1Point r = a;
  if (sgn(a.y) != 0) r.y = curve_.field_prime - a.y;
  return r;
}

// ---- Jacobian arithmetic --------------------------------------------------
//
// (X, Y, Z) represents (X/Z^2, Y/Z^3). All helpers reduce modulo p in place
// and reuse scratch integers to avoid allocation in hot loops.

namespace {

struct Jacobian {
  mpz_class X, Y, Z;
  bool infinity = true;
};

class JacobianOps {
 public:
  explicit JacobianOps(const mpz_class& p) : p_(p) {}

  void mul(mpz_class& r, const mpz_class& a, const mpz_class& b) {
    mpz_mul(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  }
  void sqr(mpz_class& r, const mpz_class& a) { mul(r, a, a); }
  void sub(mpz_class& r, const mpz_class& a, const mpz_class& b) {
    mpz_sub(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) < 0) mpz_add(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  }
  void add(mpz_class& r, const mpz_class& a, const mpz_class& b) {
    mpz_add(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r >= p_) mpz_sub(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  }
  void small(mpz_class& r, const mpz_class& a, unsigned long k) {
    mpz_mul_ui(r.get_mpz_t(), a.get_mpz_t(), k);
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
  }

  /// T <- 2T. When `line` is non-null, also writes the tangent line at T
  /// evaluated at (qx, i*qy), scaled by an F_p factor.
  void dbl(Jacobian& t, Fp2* line = nullptr, const mpz_class* qx = nullptr, const mpz_class* qy = nullptr) {
    if (t.infinity || sgn(t.Y) == 0) {
      t.infinity = true;
      return;
    }
    sqr(xx_, t.X);
    sqr(yy_, t.Y);
    sqr(zz_, t.Z);
    // M = 3X^2 + Z^4, S = 4XY^2
    sqr(m_, zz_);
    small(s_, xx_, 3);
    add(m_, m_, s_);
    mul(s_, t.X, yy_);
    small(s_, s_, 4);
    if (line != nullptr) {
      // real: -2Y^2 - M (qx Z^2 - X); imag: 2 Y Z^3 qy
      mul(u_, *qx, zz_);
      sub(u_, u_, t.X);
      mul(u_, u_, m_);
      small(v_, yy_, 2);
      add(u_, u_, v_);
      sub(line->re, p_zero_, u_);
      mul(v_, t.Y, t.Z);
      mul(v_, v_, zz_);
      small(v_, v_, 2);
      mul(line->im, v_, *qy);
    }
    // Z3 = 2YZ
    mul(t.Z, t.Y, t.Z);
    small(t.Z, t.Z, 2);
    // X3 = M^2 - 2S
    sqr(u_, m_);
    small(v_, s_, 2);
    sub(u_, u_, v_);
    // Y3 = M (S - X3) - 8 Y^4
    sub(v_, s_, u_);
    mul(v_, v_, m_);
    sqr(yy_, yy_);
    small(yy_, yy_, 8);
    sub(t.Y, v_, yy_);
    t.X = u_;
  }

  /// T <- T + A for affine A. Returns false when the chord is vertical
  /// (T = -A); T becomes infinity and no line is produced.
  bool add_affine(Jacobian& t, const G1Point& a, Fp2* line = nullptr, const mpz_class* qx = nullptr,
                  const mpz_class* qy = nullptr) {
    if (a.infinity) return true;
    if (t.infinity) {
      t.X = a.x;
      t.Y = a.y;
      t.Z = 1;
      t.infinity = false;
      return true;
    }
    sqr(zz_, t.Z);
    mul(u_, a.x, zz_);           // U2
    mul(v_, a.y, zz_);
    mul(v_, v_, t.Z);            // S2
    sub(h_, u_, t.X);            // H
    sub(r_, v_, t.Y);            // R
    if (sgn(h_) == 0) {
      if (sgn(r_) == 0) {
        dbl(t, line, qx, qy);
        return true;
      }
      t.infinity = true;
      return false;
    }
    mul(t.Z, t.Z, h_);           // Z3 = Z H
    if (line != nullptr) {
      // real: -y_A Z3 - R (qx - x_A); imag: qy Z3
      sub(u_, *qx, a.x);
      mul(u_, u_, r_);
      mul(v_, a.y, t.Z);
      add(u_, u_, v_);
      sub(line->re, p_zero_, u_);
      mul(line->im, *qy, t.Z);
    }
    sqr(xx_, h_);                // HH
    mul(yy_, xx_, h_);           // HHH
    mul(s_, t.X, xx_);           // V
    sqr(u_, r_);
    sub(u_, u_, yy_);
    small(v_, s_, 2);
    sub(u_, u_, v_);             // X3
    sub(v_, s_, u_);
    mul(v_, v_, r_);
    mul(yy_, yy_, t.Y);
    sub(t.Y, v_, yy_);           // Y3
    t.X = u_;
    return true;
  }

  G1Point to_affine(const Jacobian& t) {
    if (t.infinity) return {};
    mpz_class zinv;
    mpz_invert(zinv.get_mpz_t(), t.Z.get_mpz_t(), p_.get_mpz_t());
    G1Point out;
    out.infinity = false;
    sqr(zz_, zinv);
    mul(out.x, t.X, zz_);
    mul(zz_, zz_, zinv);
    mul(out.y, t.Y, zz_);
    return out;
  }

 private:
  const mpz_class& p_;
  const mpz_class p_zero_ = 0;
  mpz_class xx_, yy_, zz_, m_, s_, u_, v_, h_, r_;
};

}  // namespace

G1Point GroupParams::dbl(const G1Point& a) const {
  if (a.infinity) return a;
  JacobianOps ops(curve_.field_prime);
  Jacobian t{a.x, a.y, 1, false};
  ops.dbl(t);
  return ops.to_affine(t);
}

G1Point GroupParams::add(const G1Point& a, const G1Point& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  JacobianOps ops(curve_.field_prime);
  Jacobian t{a.x, a.y, 1, false};
  ops.add_affine(t, b);
  return ops.to_affine(t);
}

G1Point GroupParams::mul(const mpz_class& k, const G1Point& pt) const {
  if (pt.infinity || sgn(k) == 0) return {};
  if (sgn(k) < 0) return mul(-k, neg(pt));
  if (pt == generator_ && k < curve_.order && !comb_.empty()) return mul_fixed(k);
  JacobianOps ops(curve_.field_prime);
  Jacobian acc;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    ops.dbl(acc);
    if (mpz_tstbit(k.get_mpz_t(), i)) ops.add_affine(acc, pt);
  }
  return ops.to_affine(acc);
}

G1Point GroupParams::mul_fixed(const mpz_class& k) const {
  JacobianOps ops(curve_.field_prime);
  Jacobian acc;
  const std::size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (std::size_t w = 0; w * kCombWidth < bits; ++w) {
    unsigned digit = 0;
    for (unsigned b = 0; b < kCombWidth; ++b) {
      if (mpz_tstbit(k.get_mpz_t(), w * kCombWidth + b)) digit |= 1u << b;
    }
    if (digit != 0) ops.add_affine(acc, comb_[w][digit - 1]);
  }
  return ops.to_affine(acc);
}

void GroupParams::build_comb() {
  const std::size_t windows = (order_bits() + kCombWidth - 1) / kCombWidth;
  comb_.assign(windows, {});
  G1Point base = generator_;
  for (std::size_t w = 0; w < windows; ++w) {
    auto& row = comb_[w];
    row.reserve((1u << kCombWidth) - 1);
    G1Point acc = base;
    for (unsigned j = 1; j < (1u << kCombWidth); ++j) {
      row.push_back(acc);
      acc = add(acc, base);
    }
    base = acc;  // 2^width * base
  }
}

G1Point GroupParams::sum(std::span<const G1Point> points) const {
  JacobianOps ops(curve_.field_prime);
  Jacobian acc;
  for (const auto& pt : points) {
    if (!ops.add_affine(acc, pt)) acc.infinity = true;
  }
  return ops.to_affine(acc);
}

bool GroupParams::on_curve(const G1Point& pt) const {
  if (pt.infinity) return true;
  const auto& p = curve_.field_prime;
  if (sgn(pt.x) < 0 || pt.x >= p || sgn(pt.y) < 0 || pt.y >= p) return false;
  return reduce(pt.y * pt.y) == reduce(pt.x * pt.x * pt.x + pt.x);
}

bool GroupParams::in_subgroup(const G1Point& pt) const {
  return on_curve(pt) && mul(curve_.order, pt).infinity;
}

bool GroupParams::sqrt_mod(const mpz_class& a, mpz_class& root) const {
  const auto& p = curve_.field_prime;
  mpz_powm(root.get_mpz_t(), a.get_mpz_t(), sqrt_exponent_.get_mpz_t(), p.get_mpz_t());
  return reduce(root * root) == reduce(a);
}

G1Point GroupParams::hash_to_group(ByteView data) const {
  const auto& p = curve_.field_prime;
  for (std::uint32_t ctr = 0;; ++ctr) {
    ByteWriter w;
    w.raw(data);
    w.u32(ctr);
    mpz_class x = hash_to_range("ppcc/H0", w.bytes(), p);
    mpz_class rhs = reduce(x * x * x + x);
    if (sgn(rhs) == 0) continue;
    mpz_class y;
    if (!sqrt_mod(rhs, y)) continue;
    if (mpz_odd_p(y.get_mpz_t())) y = p - y;
    G1Point candidate{x, y, false};
    G1Point cleared = mul(curve_.cofactor, candidate);
    if (!cleared.infinity) return cleared;
  }
}

mpz_class GroupParams::hash_to_scalar(ByteView data) const {
  return hash_to_range("ppcc/H", data, curve_.order - 1) + 1;
}

mpz_class GroupParams::random_scalar(Rng& rng) const { return rng.below(curve_.order - 1) + 1; }

// ---- F_{p^2} arithmetic -------------------------------------------------

namespace {

// In-place F_p^2 arithmetic with reusable scratch.
class Fp2Ops {
 public:
  explicit Fp2Ops(const mpz_class& p) : p_(p) {}

  // r <- a * b; r may alias a or b.
  void mul(Fp2& r, const Fp2& a, const Fp2& b) {
    mpz_mul(t0_.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_mul(t1_.get_mpz_t(), a.im.get_mpz_t(), b.im.get_mpz_t());
    mpz_add(t2_.get_mpz_t(), a.re.get_mpz_t(), a.im.get_mpz_t());
    mpz_add(t3_.get_mpz_t(), b.re.get_mpz_t(), b.im.get_mpz_t());
    mpz_mul(t2_.get_mpz_t(), t2_.get_mpz_t(), t3_.get_mpz_t());
    mpz_sub(t2_.get_mpz_t(), t2_.get_mpz_t(), t0_.get_mpz_t());
    mpz_sub(t2_.get_mpz_t(), t2_.get_mpz_t(), t1_.get_mpz_t());
    mpz_sub(t0_.get_mpz_t(), t0_.get_mpz_t(), t1_.get_mpz_t());
    mpz_mod(r.re.get_mpz_t(), t0_.get_mpz_t(), p_.get_mpz_t());
    mpz_mod(r.im.get_mpz_t(), t2_.get_mpz_t(), p_.get_mpz_t());
  }

  void sqr(Fp2& r, const Fp2& a) {
    mpz_add(t0_.get_mpz_t(), a.re.get_mpz_t(), a.im.get_mpz_t());
    mpz_sub(t1_.get_mpz_t(), a.re.get_mpz_t(), a.im.get_mpz_t());
    mpz_mul(t2_.get_mpz_t(), a.re.get_mpz_t(), a.im.get_mpz_t());
    mpz_mul(t0_.get_mpz_t(), t0_.get_mpz_t(), t1_.get_mpz_t());
    mpz_mul_2exp(t2_.get_mpz_t(), t2_.get_mpz_t(), 1);
    mpz_mod(r.re.get_mpz_t(), t0_.get_mpz_t(), p_.get_mpz_t());
    mpz_mod(r.im.get_mpz_t(), t2_.get_mpz_t(), p_.get_mpz_t());
  }

  // Left-to-right sliding window, width 4.
  Fp2 pow(const Fp2& a, const mpz_class& e) {
    Fp2 acc{1, 0};
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (sgn(e) == 0) return acc;
    constexpr unsigned kWidth = 4;
    std::vector<Fp2> odd(1u << (kWidth - 1));  // a, a^3, a^5, ...
    odd[0] = a;
    Fp2 a2;
    sqr(a2, a);
    for (std::size_t j = 1; j < odd.size(); ++j) mul(odd[j], odd[j - 1], a2);
    const mpz_srcptr ev = e.get_mpz_t();
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(bits) - 1;
    while (i >= 0) {
      if (!mpz_tstbit(ev, static_cast<mp_bitcnt_t>(i))) {
        sqr(acc, acc);
        --i;
        continue;
      }
      std::ptrdiff_t lo = std::max<std::ptrdiff_t>(i - kWidth + 1, 0);
      while (!mpz_tstbit(ev, static_cast<mp_bitcnt_t>(lo))) ++lo;
      unsigned window = 0;
      for (std::ptrdiff_t b = i; b >= lo; --b) {
        window = (window << 1) | static_cast<unsigned>(mpz_tstbit(ev, static_cast<mp_bitcnt_t>(b)));
        sqr(acc, acc);
      }
      mul(acc, acc, odd[window >> 1]);
      i = lo - 1;
    }
    return acc;
  }

 private:
  const mpz_class& p_;
  mpz_class t0_, t1_, t2_, t3_;
};

}  // namespace

Fp2 GroupParams::fp2_mul(const Fp2& a, const Fp2& b) const {
  Fp2 r;
  Fp2Ops(curve_.field_prime).mul(r, a, b);
  return r;
}

Fp2 GroupParams::fp2_sqr(const Fp2& a) const {
  Fp2 r;
  Fp2Ops(curve_.field_prime).sqr(r, a);
  return r;
}

Fp2 GroupParams::fp2_inv(const Fp2& a) const {
  const auto& p = curve_.field_prime;
  mpz_class norm = reduce(a.re * a.re + a.im * a.im);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), norm.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw Error(Errc::invalid_argument, "inverting zero in F_p^2");
  }
  return {reduce(a.re * inv), reduce(-a.im * inv)};
}

Fp2 GroupParams::fp2_pow(const Fp2& a, const mpz_class& e) const {
  return Fp2Ops(curve_.field_prime).pow(a, e);
}

// ---- pairing --------------------------------------------------------------

// Miller loop for f_{q,P} evaluated at psi(Q) = (-x_Q, i*y_Q), in Jacobian
// coordinates. Every line is scaled by an F_p factor and vertical-line
// denominators lie in F_p; both vanish under the final exponentiation.
Fp2 GroupParams::miller(const G1Point& pt, const G1Point& qt) const {
  const auto& r = curve_.order;
  const mpz_class qx = reduce(-qt.x);
  const mpz_class& qy = qt.y;

  JacobianOps ops(curve_.field_prime);
  Fp2Ops f2(curve_.field_prime);
  Fp2 f{1, 0};
  Fp2 line;
  Jacobian t{pt.x, pt.y, 1, false};

  const std::size_t bits = mpz_sizeinbase(r.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    ops.dbl(t, &line, &qx, &qy);
    f2.sqr(f, f);
    f2.mul(f, f, line);
    if (mpz_tstbit(r.get_mpz_t(), i)) {
      if (ops.add_affine(t, pt, &line, &qx, &qy)) f2.mul(f, f, line);
    }
  }
  return f;
}

GtElement GroupParams::final_exponentiation(const Fp2& f) const {
  // f^(p-1) = conj(f) / f, then raise to the cofactor (p+1)/q.
  Fp2 conj{f.re, reduce(-f.im)};
  Fp2 unitary = fp2_mul(conj, fp2_inv(f));
  return {fp2_pow(unitary, curve_.cofactor)};
}

GtElement GroupParams::pair(const G1Point& a, const G1Point& b) const {
  if (a.infinity || b.infinity) return gt_one();
  return final_exponentiation(miller(a, b));
}

GtElement GroupParams::pair_product(std::span<const std::pair<G1Point, G1Point>> terms) const {
  Fp2 acc{1, 0};
  for (const auto& [a, b] : terms) {
    if (a.infinity || b.infinity) continue;
    acc = fp2_mul(acc, miller(a, b));
  }
  return final_exponentiation(acc);
}

GtElement GroupParams::gt_one() const { return {Fp2{1, 0}}; }

GtElement GroupParams::gt_mul(const GtElement& a, const GtElement& b) const {
  return {fp2_mul(a.value, b.value)};
}

GtElement GroupParams::gt_pow(const GtElement& a, const mpz_class& e) const {
  if (sgn(e) < 0) return gt_pow({fp2_inv(a.value)}, -e);
  return {fp2_pow(a.value, e)};
}

// ---- encodings ------------------------------------------------------------

Bytes GroupParams::encode(const G1Point& pt) const {
  Bytes out(point_bytes(), 0);
  if (pt.infinity) return out;
  out[0] = mpz_odd_p(pt.y.get_mpz_t()) ? 0x03 : 0x02;
  auto x = mpz_to_bytes(pt.x, field_bytes_);
  std::copy(x.begin(), x.end(), out.begin() + 1);
  return out;
}

G1Point GroupParams::decode(ByteView data) const {
  if (data.size() != point_bytes()) throw Error(Errc::invalid_encoding, "bad point length");
  const std::uint8_t tag = data[0];
  if (tag == 0) {
    for (auto b : data.subspan(1)) {
      if (b != 0) throw Error(Errc::invalid_encoding, "non-canonical infinity");
    }
    return {};
  }
  if (tag != 2 && tag != 3) throw Error(Errc::invalid_encoding, "bad point tag");
  mpz_class x = mpz_from_bytes(data.subspan(1));
  if (x >= curve_.field_prime) throw Error(Errc::invalid_encoding, "x out of range");
  mpz_class y;
  if (!sqrt_mod(reduce(x * x * x + x), y)) throw Error(Errc::invalid_encoding, "x not on curve");
  if (static_cast<int>(mpz_odd_p(y.get_mpz_t()) ? 1 : 0) != (tag & 1)) {
    y = reduce(curve_.field_prime - y);
  }
  G1Point pt{x, y, false};
  if (!in_subgroup(pt)) throw Error(Errc::invalid_encoding, "point outside the order-q subgroup");
  return pt;
}

Bytes GroupParams::encode_scalar(const mpz_class& k) const {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), k.get_mpz_t(), curve_.order.get_mpz_t());
  return mpz_to_bytes(r, scalar_bytes_);
}

Bytes GroupParams::encode_gt(const GtElement& g) const {
  return concat({mpz_to_bytes(g.value.re, field_bytes_), mpz_to_bytes(g.value.im, field_bytes_)});
}

// ---- parameter registry ---------------------------------------------------

GroupParamsPtr setup_pairing(unsigned security_level_bits) {
  static std::mutex mu;
  static std::map<unsigned, GroupParamsPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(security_level_bits); it != cache.end()) return it->second;
  const auto* constants = find_curve_constants(security_level_bits);
  if (constants == nullptr) {
    throw Error(Errc::unsupported_level,
                "no type-A curve with a " + std::to_string(security_level_bits) + "-bit group order");
  }
  TypeACurve curve{mpz_class(constants->field_prime_hex, 16), mpz_class(constants->order_hex, 16),
                   mpz_class(constants->cofactor_hex, 16)};
  auto params = std::make_shared<const GroupParams>(std::move(curve));
  cache.emplace(security_level_bits, params);
  return params;
}

}  // namespace ppcc::pairing
