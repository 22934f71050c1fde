#include "ppcc/common/bytes.hpp"

#include <bit>
#include <cstring>

#include "ppcc/common/error.hpp"

namespace ppcc {

Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::string to_hex(ByteView data) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (auto b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
  Bytes out;
  int hi = -1;
  for (char c : hex) {
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') continue;
    int v = hex_value(c);
    if (v < 0) throw Error(Errc::invalid_encoding, "non-hex character");
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<std::uint8_t>(hi << 4 | v));
      hi = -1;
    }
  }
  if (hi >= 0) throw Error(Errc::invalid_encoding, "odd number of hex digits");
  return out;
}

Bytes concat(std::initializer_list<ByteView> parts) {
  Bytes out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::size_t byte_width(const mpz_class& modulus) {
  return (mpz_sizeinbase(modulus.get_mpz_t(), 2) + 7) / 8;
}

Bytes mpz_to_bytes(const mpz_class& value, std::size_t width) {
  if (sgn(value) < 0) throw Error(Errc::invalid_encoding, "negative integer");
  std::size_t need = sgn(value) == 0 ? 0 : (mpz_sizeinbase(value.get_mpz_t(), 2) + 7) / 8;
  if (need > width) throw Error(Errc::invalid_encoding, "integer wider than field");
  Bytes out(width, 0);
  std::size_t count = 0;
  if (need > 0) {
    mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, value.get_mpz_t());
  }
  return out;
}

mpz_class mpz_from_bytes(ByteView data) {
  mpz_class v;
  if (!data.empty()) mpz_import(v.get_mpz_t(), data.size(), 1, 1, 1, 0, data.data());
  return v;
}

void ByteWriter::u32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::u64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::blob(ByteView data) {
  u32(static_cast<std::uint32_t>(data.size()));
  raw(data);
}

void ByteReader::need(std::size_t n) const {
  if (remaining() < n) throw Error(Errc::malformed_frame, "truncated input");
}

std::uint8_t ByteReader::u8() {
  need(1);
  return data_[pos_++];
}

std::uint32_t ByteReader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{data_[pos_++]} << (8 * i);
  return v;
}

std::uint64_t ByteReader::u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{data_[pos_++]} << (8 * i);
  return v;
}

double ByteReader::f64() { return std::bit_cast<double>(u64()); }

Bytes ByteReader::raw(std::size_t n) {
  need(n);
  Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

Bytes ByteReader::blob() {
  auto n = u32();
  return raw(n);
}

void ByteReader::expect_done() const {
  if (!done()) throw Error(Errc::malformed_frame, "trailing bytes");
}

}  // namespace ppcc
