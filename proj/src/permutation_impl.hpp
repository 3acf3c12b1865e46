#pragma once

#include <bit>
#include <cstdint>

#include "ascon/permutation.hpp"
#include "fault.hpp"

namespace ascon::detail {

constexpr std::uint8_t round_constant_at(unsigned index) {
  return static_cast<std::uint8_t>(((0xFu - index) << 4) | index);
}

template <Fault F>
constexpr std::uint8_t scheduled_constant(unsigned index) {
  if constexpr (F == Fault::wrong_round_constants) {
    return static_cast<std::uint8_t>((index << 4) | (0xFu - index));
  } else {
    return round_constant_at(index);
  }
}

// Word-parallel S-box: 22 XOR/AND/NOT instructions for 64 slices.
constexpr State sbox_words(const State& in) {
  std::uint64_t x0 = in[0], x1 = in[1], x2 = in[2], x3 = in[3], x4 = in[4];

  x0 ^= x4;
  x4 ^= x3;
  x2 ^= x1;
  const std::uint64_t t0 = ~x0 & x1;
  const std::uint64_t t1 = ~x1 & x2;
  const std::uint64_t t2 = ~x2 & x3;
  const std::uint64_t t3 = ~x3 & x4;
  const std::uint64_t t4 = ~x4 & x0;
  x0 ^= t1;
  x1 ^= t2;
  x2 ^= t3;
  x3 ^= t4;
  x4 ^= t0;
  x1 ^= x0;
  x0 ^= x4;
  x3 ^= x2;
  x2 = ~x2;

  return {x0, x1, x2, x3, x4};
}

template <Fault F, int A, int B>
constexpr std::uint64_t diffuse(std::uint64_t x) {
  if constexpr (F == Fault::left_rotation) {
    return x ^ std::rotl(x, A) ^ std::rotl(x, B);
  } else if constexpr (F == Fault::missing_linear_xor) {
    return std::rotr(x, A) ^ std::rotr(x, B);
  } else {
    return x ^ std::rotr(x, A) ^ std::rotr(x, B);
  }
}

template <Fault F>
constexpr State linear_words(const State& in) {
  return {diffuse<F, 19, 28>(in[0]), diffuse<F, 61, 39>(in[1]),
          diffuse<F, 1, 6>(in[2]), diffuse<F, 10, 17>(in[3]),
          diffuse<F, 7, 41>(in[4])};
}

template <Fault F>
constexpr State permute_with(State state, unsigned rounds) {
  for (unsigned i = kMaxRounds - rounds; i < kMaxRounds; ++i) {
    state.xor_word(2, scheduled_constant<F>(i));
    state = sbox_words(state);
    state = linear_words<F>(state);
  }
  return state;
}

}  // namespace ascon::detail
