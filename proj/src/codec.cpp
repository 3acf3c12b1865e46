#include "ascon/codec.hpp"

#include <algorithm>

namespace ascon {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::uint64_t word_from_bytes(ByteView b) {
  if (b.size() != 8) {
    throw std::invalid_argument("word_from_bytes: expected exactly 8 octets");
  }
  std::uint64_t w = 0;
  for (const std::uint8_t octet : b) {
    w = (w << 8) | octet;
  }
  return w;
}

std::array<std::uint8_t, 8> bytes_from_word(std::uint64_t w) {
  std::array<std::uint8_t, 8> out{};
  for (std::size_t i = 0; i < 8; ++i) {
    out[i] = static_cast<std::uint8_t>(w >> (56 - 8 * i));
  }
  return out;
}

Bytes pad_10star(ByteView data, std::size_t rate_bytes) {
  if (rate_bytes != 8 && rate_bytes != 16) {
    throw std::invalid_argument("pad_10star: rate must be 8 or 16 octets");
  }
  const std::size_t padded = (data.size() / rate_bytes + 1) * rate_bytes;
  Bytes out(padded, 0x00);
  std::copy(data.begin(), data.end(), out.begin());
  out[data.size()] = 0x80;
  return out;
}

Bytes xor_bytes(ByteView a, ByteView b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("xor_bytes: operands differ in length");
  }
  Bytes out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(a[i] ^ b[i]);
  }
  return out;
}

Bytes hex_decode(std::string_view text) {
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (hex_value(text[i]) < 0) {
      throw HexError("invalid hex character at position " + std::to_string(i), i);
    }
  }
  if (text.size() % 2 != 0) {
    throw HexError("odd number of hex digits (position " +
                       std::to_string(text.size()) + ")",
                   text.size());
  }
  Bytes out(text.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>((hex_value(text[2 * i]) << 4) |
                                       hex_value(text[2 * i + 1]));
  }
  return out;
}

std::string hex_encode(ByteView b) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(2 * b.size());
  for (const std::uint8_t octet : b) {
    out.push_back(kDigits[octet >> 4]);
    out.push_back(kDigits[octet & 0x0F]);
  }
  return out;
}

void secure_wipe(std::span<std::uint8_t> buffer) noexcept {
  volatile std::uint8_t* p = buffer.data();
  for (std::size_t i = 0; i < buffer.size(); ++i) {
    p[i] = 0;
  }
}

}  // namespace ascon
