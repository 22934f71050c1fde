#include "support.hpp"

#include "ppcc/common/bytes.hpp"
#include "ppcc/common/hash.hpp"
#include "ppcc/common/rng.hpp"

namespace ppcc {
namespace {

TEST(Bytes, HexRoundtrip) {
  const Bytes b = {0x00, 0x01, 0xab, 0xff};
  EXPECT_EQ(to_hex(b), "0001abff");
  EXPECT_EQ(from_hex("0001ABff"), b);
  test::expect_errc(Errc::invalid_encoding, [] { from_hex("abc"); });
  test::expect_errc(Errc::invalid_encoding, [] { from_hex("zz"); });
}

TEST(Bytes, FixedWidthIntegers) {
  EXPECT_EQ(to_hex(mpz_to_bytes(mpz_class(258), 4)), "00000102");
  EXPECT_EQ(mpz_from_bytes(from_hex("00000102")), 258);
  test::expect_errc(Errc::invalid_encoding, [] { mpz_to_bytes(mpz_class(1) << 32, 4); });
  test::expect_errc(Errc::invalid_encoding, [] { mpz_to_bytes(mpz_class(-1), 4); });
  EXPECT_EQ(byte_width(mpz_class(255)), 1u);
  EXPECT_EQ(byte_width(mpz_class(256)), 2u);
}

TEST(Bytes, WriterReaderRoundtrip) {
  ByteWriter w;
  w.u8(7);
  w.u32(0xdeadbeef);
  w.i64(-5);
  w.f64(0.1);
  w.blob(to_bytes("hi"));
  const Bytes b = w.bytes();
  EXPECT_EQ(to_hex(Bytes(b.begin() + 1, b.begin() + 5)), "efbeadde");
  ByteReader r(b);
  EXPECT_EQ(r.u8(), 7);
  EXPECT_EQ(r.u32(), 0xdeadbeefu);
  EXPECT_EQ(r.i64(), -5);
  EXPECT_EQ(r.f64(), 0.1);
  EXPECT_EQ(r.blob(), to_bytes("hi"));
  EXPECT_TRUE(r.done());
  test::expect_errc(Errc::malformed_frame, [&] { r.u8(); });
}

TEST(Hash, KnownSha256) {
  EXPECT_EQ(to_hex(sha256(to_bytes("abc"))), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Hash, TagsSeparateDomains) {
  const auto m = to_bytes("m");
  EXPECT_NE(sha256_tagged("a", m), sha256_tagged("b", m));
  EXPECT_EQ(sha256_tagged("a", m), sha256(concat({to_bytes("a"), Bytes{0}, m})));
  EXPECT_EQ(hash_expand("t", m, 100).size(), 100u);
  const mpz_class mod(1000003);
  const auto h = hash_to_range("t", m, mod);
  EXPECT_GE(h, 0);
  EXPECT_LT(h, mod);
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const auto k = r.uniform_int(3, 5);
    EXPECT_GE(k, 3);
    EXPECT_LE(k, 5);
    EXPECT_LT(r.below(mpz_class(17)), 17);
  }
  EXPECT_EQ(mpz_sizeinbase(r.exact_bits(100).get_mpz_t(), 2), 100u);
}

}  // namespace
}  // namespace ppcc
