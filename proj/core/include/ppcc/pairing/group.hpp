#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ppcc/common/bytes.hpp"
#include "ppcc/common/rng.hpp"

namespace ppcc::pairing {

/// Element re + im*i of F_p[i]/(i^2 + 1).
struct Fp2 {
  mpz_class re;
  mpz_class im;

  friend bool operator==(const Fp2&, const Fp2&) = default;
};

/// Affine point on y^2 = x^3 + x. The default value is the point at infinity.
struct G1Point {
  mpz_class x;
  mpz_class y;
  bool infinity = true;

  friend bool operator==(const G1Point& a, const G1Point& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

/// Element of the order-q subgroup of F_{p^2}^*.
struct GtElement {
  Fp2 value;

  friend bool operator==(const GtElement&, const GtElement&) = default;
};

/// Raw curve constants; see `generate_type_a`.
struct TypeACurve {
  mpz_class field_prime;  // p = cofactor * order - 1, p = 3 (mod 4)
  mpz_class order;        // q, prime
  mpz_class cofactor;     // h = (p + 1) / q
};

/// Deterministically search for type-A constants from a seed label.
TypeACurve generate_type_a(unsigned order_bits, unsigned field_bits, std::string_view seed_label);

/// Symmetric bilinear group: G1 of prime order q on the supersingular curve
/// y^2 = x^3 + x over F_p, target group inside F_{p^2}, and the reduced Tate
/// pairing composed with the distortion map (x, y) -> (-x, i*y).
///
/// Instances are immutable and safe to share across threads.
class GroupParams {
 public:
  explicit GroupParams(TypeACurve curve);

  const mpz_class& field_prime() const { return curve_.field_prime; }
  const mpz_class& order() const { return curve_.order; }
  const mpz_class& cofactor() const { return curve_.cofactor; }
  const G1Point& generator() const { return generator_; }
  unsigned order_bits() const;

  // Group law.
  G1Point add(const G1Point& a, const G1Point& b) const;
  G1Point dbl(const G1Point& a) const;
  G1Point neg(const G1Point& a) const;
  G1Point sub(const G1Point& a, const G1Point& b) const { return add(a, neg(b)); }
  /// k*P for any integer k (reduced modulo the order for subgroup points
  /// is the caller's business; negative k negates).
  G1Point mul(const mpz_class& k, const G1Point& p) const;
  G1Point mul_generator(const mpz_class& k) const { return mul(k, generator_); }
  G1Point sum(std::span<const G1Point> points) const;

  bool on_curve(const G1Point& p) const;
  bool in_subgroup(const G1Point& p) const;

  /// H0: bytes -> G1 (try-and-increment, cofactor cleared).
  G1Point hash_to_group(ByteView data) const;
  /// H: bytes -> Z*_q, i.e. a scalar in [1, q-1].
  mpz_class hash_to_scalar(ByteView data) const;
  /// Uniform scalar in [1, q-1].
  mpz_class random_scalar(Rng& rng) const;
  /// Uniform point of G1 (random multiple of the generator).
  G1Point random_point(Rng& rng) const { return mul_generator(random_scalar(rng)); }

  GtElement pair(const G1Point& a, const G1Point& b) const;
  /// Product of pairings with a single final exponentiation.
  GtElement pair_product(std::span<const std::pair<G1Point, G1Point>> terms) const;
  GtElement gt_one() const;
  GtElement gt_mul(const GtElement& a, const GtElement& b) const;
  GtElement gt_pow(const GtElement& a, const mpz_class& e) const;

  /// Compressed fixed-width encoding: 1 tag byte (0 = infinity,
  /// 2/3 = y parity) followed by x as a big-endian field element.
  std::size_t point_bytes() const { return 1 + field_bytes_; }
  std::size_t scalar_bytes() const { return scalar_bytes_; }
  std::size_t gt_bytes() const { return 2 * field_bytes_; }
  Bytes encode(const G1Point& p) const;
  /// Rejects points off the curve or outside the order-q subgroup.
  G1Point decode(ByteView data) const;
  Bytes encode_scalar(const mpz_class& k) const;
  Bytes encode_gt(const GtElement& g) const;

 private:
  Fp2 miller(const G1Point& p, const G1Point& q) const;
  GtElement final_exponentiation(const Fp2& f) const;
  Fp2 fp2_mul(const Fp2& a, const Fp2& b) const;
  Fp2 fp2_sqr(const Fp2& a) const;
  Fp2 fp2_inv(const Fp2& a) const;
  Fp2 fp2_pow(const Fp2& a, const mpz_class& e) const;
  bool sqrt_mod(const mpz_class& a, mpz_class& root) const;
  mpz_class reduce(const mpz_class& v) const;
  G1Point mul_fixed(const mpz_class& k) const;
  void build_comb();

  static constexpr unsigned kCombWidth = 4;

  TypeACurve curve_;
  G1Point generator_;
  mpz_class sqrt_exponent_;  // (p + 1) / 4
  std::size_t field_bytes_ = 0;
  std::size_t scalar_bytes_ = 0;
  // comb_[w][j-1] = j * 2^(w*kCombWidth) * generator
  std::vector<std::vector<G1Point>> comb_;
};

using GroupParamsPtr = std::shared_ptr<const GroupParams>;

/// Supported levels are the group-order sizes 160, 224 and 256 bits (all
/// over a 512-bit base field). Throws Errc::unsupported_level otherwise.
GroupParamsPtr setup_pairing(unsigned security_level_bits);

}  // namespace ppcc::pairing
