#include "ascon/aead.hpp"

#include <stdexcept>
#include <type_traits>

#include "aead_impl.hpp"

namespace ascon {

using detail::Fault;

const VariantParams& params_for(Variant variant) {
  return variant == Variant::ascon128a ? kAscon128a : kAscon128;
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text == "ascon128") return Variant::ascon128;
  if (text == "ascon128a") return Variant::ascon128a;
  return std::nullopt;
}

Key::Key(ByteView bytes) {
  if (bytes.size() != kBlock128Bytes) {
    throw std::invalid_argument("key must be exactly 16 octets");
  }
  std::copy(bytes.begin(), bytes.end(), bytes_.begin());
}

Key::~Key() { secure_wipe(bytes_); }

std::uint64_t Key::high_word() const { return word_from_bytes(ByteView(bytes_).first(8)); }
std::uint64_t Key::low_word() const { return word_from_bytes(ByteView(bytes_).last(8)); }

template <typename Kind>
Block128<Kind>::Block128(ByteView bytes) {
  if (bytes.size() != kBlock128Bytes) {
    throw std::invalid_argument(std::is_same_v<Kind, detail::NonceKind>
                                    ? "nonce must be exactly 16 octets"
                                    : "tag must be exactly 16 octets");
  }
  std::copy(bytes.begin(), bytes.end(), bytes_.begin());
}

template class Block128<detail::NonceKind>;
template class Block128<detail::TagKind>;

bool constant_time_equal(ByteView a, ByteView b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::uint8_t diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff |= static_cast<std::uint8_t>(a[i] ^ b[i]);
  }
  return diff == 0;
}

State initialize(const VariantParams& params, const Key& key, const Nonce& nonce) {
  return detail::initialize_with<Fault::none>(params, key, nonce);
}

State process_associated_data(State state, const VariantParams& params, ByteView ad) {
  return detail::process_associated_data_with<Fault::none>(state, params, ad);
}

PhaseOutput encrypt_data(State state, const VariantParams& params, ByteView plaintext) {
  return detail::encrypt_data_with<Fault::none>(state, params, plaintext);
}

PhaseOutput decrypt_data(State state, const VariantParams& params, ByteView ciphertext) {
  return detail::decrypt_data_with<Fault::none>(state, params, ciphertext);
}

Tag finalize(State state, const VariantParams& params, const Key& key) {
  return detail::finalize_with<Fault::none>(state, params, key);
}

Sealed encrypt(const VariantParams& params, const Key& key, const Nonce& nonce,
               ByteView ad, ByteView plaintext) {
  return detail::encrypt_with<Fault::none>(params, key, nonce, ad, plaintext);
}

std::optional<Bytes> decrypt(const VariantParams& params, const Key& key,
                             const Nonce& nonce, ByteView ad, ByteView ciphertext,
                             const Tag& tag) {
  return detail::decrypt_with<Fault::none>(params, key, nonce, ad, ciphertext, tag);
}

}  // namespace ascon
