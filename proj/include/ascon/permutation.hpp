#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

// The 320-bit ASCON permutation.
//
// The state is bit-sliced into five 64-bit words: bit j of word i is input
// bit x_i of the j-th 5-bit S-box. Every round adds a constant to word 2,
// runs the 64 S-boxes in parallel through a Boolean circuit and diffuses each
// word with two rotations. Nothing here branches on or indexes memory by a
// state-derived value.
namespace ascon {

class State {
public:
  static constexpr std::size_t kWords = 5;

  constexpr State() = default;
  constexpr State(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2,
                  std::uint64_t s3, std::uint64_t s4)
      : words_{s0, s1, s2, s3, s4} {}

  constexpr std::uint64_t operator[](std::size_t i) const { return words_[i]; }
  constexpr std::span<const std::uint64_t, kWords> words() const { return words_; }

  constexpr void xor_word(std::size_t i, std::uint64_t value) { words_[i] ^= value; }
  constexpr void set_word(std::size_t i, std::uint64_t value) { words_[i] = value; }

  friend constexpr bool operator==(const State&, const State&) = default;

private:
  std::array<std::uint64_t, kWords> words_{};
};

// Number of permutation rounds; only 6, 8 and 12 are valid.
class RoundCount {
public:
  // Throws std::invalid_argument for any other value.
  explicit RoundCount(unsigned rounds);

  constexpr unsigned value() const { return rounds_; }

private:
  unsigned rounds_;
};

inline constexpr unsigned kMaxRounds = 12;

// Rotates right by r bits. Throws std::out_of_range unless 0 <= r <= 63.
std::uint64_t rotr64(std::uint64_t x, unsigned r);

// Constant for position `index` of the 12-round schedule:
// ((0xF - index) << 4) | index. An n-round permutation uses the last n
// entries. Throws std::out_of_range unless index <= 11.
std::uint8_t round_constant(unsigned index);

// XORs round_constant(index) into word 2.
State add_round_constant(State state, unsigned index);

State substitution_layer(State state);

// s_i ^= rotr(s_i, a_i) ^ rotr(s_i, b_i) with the pairs
// (19,28), (61,39), (1,6), (10,17), (7,41).
State linear_layer(State state);

State permute(State state, RoundCount rounds);

}  // namespace ascon
