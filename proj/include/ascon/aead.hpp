#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ascon/codec.hpp"
#include "ascon/permutation.hpp"

// ASCON-128 and ASCON-128a authenticated encryption.
//
// The one-shot entry points are encrypt() and decrypt(). The four phases
// (initialize, process_associated_data, encrypt_data/decrypt_data, finalize)
// are exported as well so intermediate states can be inspected.
//
// A nonce must never be used twice under the same key. The library does not
// detect reuse.
namespace ascon {

enum class Variant { ascon128, ascon128a };

struct VariantParams {
  Variant variant;
  std::string_view name;
  std::size_t key_bits;
  std::size_t nonce_bits;
  std::size_t tag_bits;
  std::size_t rate_bytes;
  unsigned rounds_a;
  unsigned rounds_b;
  std::uint64_t iv_word;

  constexpr std::size_t rate_words() const { return rate_bytes / 8; }
};

inline constexpr VariantParams kAscon128{
    Variant::ascon128, "ASCON-128", 128, 128, 128, 8, 12, 6, 0x80400C0600000000};
inline constexpr VariantParams kAscon128a{
    Variant::ascon128a, "ASCON-128a", 128, 128, 128, 16, 12, 8, 0x80800C0800000000};

const VariantParams& params_for(Variant variant);

// Accepts the CLI spellings "ascon128" and "ascon128a".
std::optional<Variant> parse_variant(std::string_view text);

inline constexpr std::size_t kBlock128Bytes = 16;

// 128-bit secret key. The bytes are wiped on destruction and never appear in
// exception messages.
class Key {
public:
  // Throws std::invalid_argument unless bytes.size() == 16.
  explicit Key(ByteView bytes);
  explicit Key(const std::array<std::uint8_t, kBlock128Bytes>& bytes) : bytes_(bytes) {}
  Key(const Key&) = default;
  Key& operator=(const Key&) = default;
  ~Key();

  ByteView bytes() const { return bytes_; }
  std::uint64_t high_word() const;
  std::uint64_t low_word() const;

private:
  std::array<std::uint8_t, kBlock128Bytes> bytes_{};
};

namespace detail {
struct NonceKind;
struct TagKind;
}  // namespace detail

template <typename Kind>
class Block128 {
public:
  explicit Block128(ByteView bytes);
  explicit Block128(const std::array<std::uint8_t, kBlock128Bytes>& bytes) : bytes_(bytes) {}

  ByteView bytes() const { return bytes_; }
  const std::array<std::uint8_t, kBlock128Bytes>& array() const { return bytes_; }

private:
  std::array<std::uint8_t, kBlock128Bytes> bytes_{};
};

using Nonce = Block128<detail::NonceKind>;
using Tag = Block128<detail::TagKind>;

// Full-width comparison without early exit.
bool constant_time_equal(ByteView a, ByteView b);

inline bool operator==(const Tag& a, const Tag& b) {
  return constant_time_equal(a.bytes(), b.bytes());
}

struct PhaseOutput {
  State state;
  Bytes data;
};

struct Sealed {
  Bytes ciphertext;
  Tag tag;
};

// IV || K || N, permuted with rounds_a, then 0* || K.
State initialize(const VariantParams& params, const Key& key, const Nonce& nonce);

// Pads and absorbs non-empty AD (one permutation per block, the last block
// included); empty AD is skipped. Always ends with the domain separator
// s4 ^= 1.
State process_associated_data(State state, const VariantParams& params, ByteView ad);

// No permutation follows the final (padded) block. |data| == |plaintext|.
PhaseOutput encrypt_data(State state, const VariantParams& params, ByteView plaintext);

// Inverse of encrypt_data on both the state and the data.
PhaseOutput decrypt_data(State state, const VariantParams& params, ByteView ciphertext);

Tag finalize(State state, const VariantParams& params, const Key& key);

Sealed encrypt(const VariantParams& params, const Key& key, const Nonce& nonce,
               ByteView ad, ByteView plaintext);

// Returns the plaintext, or std::nullopt when the tag does not verify. No
// plaintext octet is released on failure.
std::optional<Bytes> decrypt(const VariantParams& params, const Key& key,
                             const Nonce& nonce, ByteView ad, ByteView ciphertext,
                             const Tag& tag);

}  // namespace ascon
