#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "ascon/aead.hpp"
#include "ascon/codec.hpp"
#include "fault.hpp"
#include "permutation_impl.hpp"

namespace ascon::detail {

using RateBlock = std::array<std::uint8_t, 16>;

inline RateBlock read_rate(const State& state, std::size_t rate_words) {
  RateBlock out{};
  for (std::size_t w = 0; w < rate_words; ++w) {
    const auto word = bytes_from_word(state[w]);
    std::copy(word.begin(), word.end(), out.begin() + 8 * w);
  }
  return out;
}

inline void write_rate(State& state, std::size_t rate_words, const RateBlock& block) {
  for (std::size_t w = 0; w < rate_words; ++w) {
    state.set_word(w, word_from_bytes(ByteView(block).subspan(8 * w, 8)));
  }
}

inline void absorb_block(State& state, std::size_t rate_words, ByteView block) {
  for (std::size_t w = 0; w < rate_words; ++w) {
    state.xor_word(w, word_from_bytes(block.subspan(8 * w, 8)));
  }
}

template <Fault F>
std::uint64_t iv_for(const VariantParams& params) {
  if constexpr (F == Fault::wrong_iv) {
    return params.variant == Variant::ascon128 ? kAscon128a.iv_word : kAscon128.iv_word;
  } else {
    return params.iv_word;
  }
}

template <Fault F>
State initialize_with(const VariantParams& params, const Key& key, const Nonce& nonce) {
  const ByteView n = nonce.bytes();
  State state{iv_for<F>(params), key.high_word(), key.low_word(),
              word_from_bytes(n.first(8)), word_from_bytes(n.last(8))};
  state = permute_with<F>(state, params.rounds_a);
  if constexpr (F != Fault::missing_init_key_xor) {
    state.xor_word(3, key.high_word());
    state.xor_word(4, key.low_word());
  }
  return state;
}

template <Fault F>
State process_associated_data_with(State state, const VariantParams& params, ByteView ad) {
  const std::size_t rate = params.rate_bytes;
  const std::size_t words = params.rate_words();
  if (!ad.empty()) {
    const std::size_t full = ad.size() / rate;
    for (std::size_t i = 0; i < full; ++i) {
      absorb_block(state, words, ad.subspan(i * rate, rate));
      state = permute_with<F>(state, params.rounds_b);
    }
    const Bytes last = pad_10star(ad.subspan(full * rate), rate);
    absorb_block(state, words, last);
    if constexpr (F != Fault::missing_final_ad_permutation) {
      state = permute_with<F>(state, params.rounds_b);
    }
  }
  if constexpr (F != Fault::missing_domain_separator) {
    state.xor_word(4, 1);
  }
  return state;
}

template <Fault F>
PhaseOutput encrypt_data_with(State state, const VariantParams& params, ByteView plaintext) {
  const std::size_t rate = params.rate_bytes;
  const std::size_t words = params.rate_words();
  Bytes out;
  out.reserve(plaintext.size());

  const std::size_t full = plaintext.size() / rate;
  for (std::size_t i = 0; i < full; ++i) {
    absorb_block(state, words, plaintext.subspan(i * rate, rate));
    const RateBlock ct = read_rate(state, words);
    out.insert(out.end(), ct.begin(), ct.begin() + rate);
    state = permute_with<F>(state, params.rounds_b);
  }

  const ByteView tail = plaintext.subspan(full * rate);
  const Bytes last = pad_10star(tail, rate);
  absorb_block(state, words, last);
  const RateBlock ct = read_rate(state, words);
  out.insert(out.end(), ct.begin(), ct.begin() + tail.size());
  if constexpr (F == Fault::extra_final_data_permutation) {
    state = permute_with<F>(state, params.rounds_b);
  }
  return {state, std::move(out)};
}

template <Fault F>
PhaseOutput decrypt_data_with(State state, const VariantParams& params, ByteView ciphertext) {
  const std::size_t rate = params.rate_bytes;
  const std::size_t words = params.rate_words();
  Bytes out;
  out.reserve(ciphertext.size());

  const std::size_t full = ciphertext.size() / rate;
  for (std::size_t i = 0; i < full; ++i) {
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t c = word_from_bytes(ciphertext.subspan(i * rate + 8 * w, 8));
      const auto p = bytes_from_word(state[w] ^ c);
      out.insert(out.end(), p.begin(), p.end());
      state.set_word(w, c);
    }
    state = permute_with<F>(state, params.rounds_b);
  }

  const ByteView tail = ciphertext.subspan(full * rate);
  RateBlock block = read_rate(state, words);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    out.push_back(static_cast<std::uint8_t>(block[i] ^ tail[i]));
    block[i] = tail[i];
  }
  block[tail.size()] ^= 0x80;
  write_rate(state, words, block);
  if constexpr (F == Fault::extra_final_data_permutation) {
    state = permute_with<F>(state, params.rounds_b);
  }
  secure_wipe(block);
  return {state, std::move(out)};
}

template <Fault F>
Tag finalize_with(State state, const VariantParams& params, const Key& key) {
  std::size_t offset = params.rate_words();
  if constexpr (F == Fault::wrong_finalize_key_offset) {
    offset += 1;
  }
  state.xor_word(offset, key.high_word());
  state.xor_word(offset + 1, key.low_word());
  state = permute_with<F>(state, params.rounds_a);

  std::array<std::uint8_t, kBlock128Bytes> tag{};
  const auto hi = bytes_from_word(state[3] ^ key.high_word());
  const auto lo = bytes_from_word(state[4] ^ key.low_word());
  std::copy(hi.begin(), hi.end(), tag.begin());
  std::copy(lo.begin(), lo.end(), tag.begin() + 8);
  return Tag(tag);
}

template <Fault F>
Sealed encrypt_with(const VariantParams& params, const Key& key, const Nonce& nonce,
                    ByteView ad, ByteView plaintext) {
  State state = initialize_with<F>(params, key, nonce);
  state = process_associated_data_with<F>(state, params, ad);
  PhaseOutput data = encrypt_data_with<F>(state, params, plaintext);
  return {std::move(data.data), finalize_with<F>(data.state, params, key)};
}

template <Fault F>
std::optional<Bytes> decrypt_with(const VariantParams& params, const Key& key,
                                  const Nonce& nonce, ByteView ad, ByteView ciphertext,
                                  const Tag& tag) {
  State state = initialize_with<F>(params, key, nonce);
  state = process_associated_data_with<F>(state, params, ad);
  PhaseOutput data = decrypt_data_with<F>(state, params, ciphertext);
  const Tag expected = finalize_with<F>(data.state, params, key);
  if (!constant_time_equal(expected.bytes(), tag.bytes())) {
    secure_wipe(data.data);
    return std::nullopt;
  }
  return std::move(data.data);
}

}  // namespace ascon::detail
