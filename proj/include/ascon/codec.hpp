#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Byte/word conversion, padding, XOR and hex helpers. Words are packed
// big-endian: the first octet is the most significant byte.
namespace ascon {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

// Throws std::invalid_argument unless b.size() == 8.
std::uint64_t word_from_bytes(ByteView b);

std::array<std::uint8_t, 8> bytes_from_word(std::uint64_t w);

// Appends 0x80 and then zeros up to the next multiple of rate_bytes. At least
// one octet is always added, so a full final block gains a whole padding
// block. Throws std::invalid_argument unless rate_bytes is 8 or 16.
Bytes pad_10star(ByteView data, std::size_t rate_bytes);

// Throws std::invalid_argument if the lengths differ.
Bytes xor_bytes(ByteView a, ByteView b);

class HexError : public std::invalid_argument {
public:
  HexError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}

  // Offset of the offending character (the string length for odd input).
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

// Case-insensitive; the empty string decodes to an empty buffer.
Bytes hex_decode(std::string_view text);

// Uppercase, no separators.
std::string hex_encode(ByteView b);

// Zeroes the buffer in a way the optimizer may not elide.
void secure_wipe(std::span<std::uint8_t> buffer) noexcept;

}  // namespace ascon
