#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ppcc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

Bytes to_bytes(std::string_view s);
std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

Bytes concat(std::initializer_list<ByteView> parts);

/// Fixed-width big-endian encoding; throws invalid_encoding if `value`
/// is negative or does not fit in `width` bytes.
Bytes mpz_to_bytes(const mpz_class& value, std::size_t width);
mpz_class mpz_from_bytes(ByteView data);
std::size_t byte_width(const mpz_class& modulus);

/// Append-only little-endian writer used by every wire codec.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
  void f64(double v);
  void raw(ByteView data) { out_.insert(out_.end(), data.begin(), data.end()); }
  /// u32 length prefix followed by the bytes.
  void blob(ByteView data);

  const Bytes& bytes() const& { return out_; }
  Bytes take() && { return std::move(out_); }

 private:
  Bytes out_;
};

/// Bounds-checked reader; any overrun throws Errc::malformed_frame.
class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  double f64();
  Bytes raw(std::size_t n);
  Bytes blob();

  std::size_t remaining() const { return data_.size() - pos_; }
  bool done() const { return pos_ == data_.size(); }
  void expect_done() const;

 private:
  void need(std::size_t n) const;

  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace ppcc
