#include "ascon/permutation.hpp"

#include <bit>
#include <stdexcept>

#include "permutation_impl.hpp"

namespace ascon {

RoundCount::RoundCount(unsigned rounds) : rounds_(rounds) {
  if (rounds != 6 && rounds != 8 && rounds != 12) {
    throw std::invalid_argument("round count must be 6, 8 or 12");
  }
}

std::uint64_t rotr64(std::uint64_t x, unsigned r) {
  if (r > 63) {
    throw std::out_of_range("rotr64: rotation amount must be in 0..63");
  }
  return std::rotr(x, static_cast<int>(r));
}

std::uint8_t round_constant(unsigned index) {
  if (index >= kMaxRounds) {
    throw std::out_of_range("round_constant: index must be in 0..11");
  }
  return detail::round_constant_at(index);
}

State add_round_constant(State state, unsigned index) {
  state.xor_word(2, round_constant(index));
  return state;
}

State substitution_layer(State state) { return detail::sbox_words(state); }

State linear_layer(State state) {
  return detail::linear_words<detail::Fault::none>(state);
}

State permute(State state, RoundCount rounds) {
  return detail::permute_with<detail::Fault::none>(state, rounds.value());
}

}  // namespace ascon
