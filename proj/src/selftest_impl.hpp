#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "aead_impl.hpp"
#include "ascon/selftest.hpp"

namespace ascon::detail {

struct EmbeddedVector {
  std::string_view name;
  const VariantParams* params;
  std::string_view pt;
  std::string_view ad;
  std::string_view ct_and_tag;
};

// Key = Nonce = 000102...0F for all of these.
inline constexpr std::string_view kSequence32 =
    "000102030405060708090A0B0C0D0E0F101112131415161718191A1B1C1D1E1F";

inline const EmbeddedVector kEmbeddedVectors[] = {
    {"ASCON-128 KAT count 1", &kAscon128, "", "", "E355159F292911F794CB1432A0103A8A"},
    {"ASCON-128a KAT count 1", &kAscon128a, "", "", "7A834E6F09210957067B10FD831F0078"},
    {"ASCON-128 KAT count 1089", &kAscon128, kSequence32, kSequence32,
     "B96C78651B6246B0C3B1A5D373B0D5168DCA4A96734CF0DDF5F92F8D15E30270"
     "279BF6A6CC3F2FC9350B915C292BDB8D"},
    {"ASCON-128a KAT count 1089", &kAscon128a, kSequence32, kSequence32,
     "A55236AC020DBDA74CE6CCD10C68C4D8514450A382BC87C68946D86A921DD88E"
     "2ADDDFBBE77D4112830E01960B9D38D5"},
};

inline Key sequence_key() { return Key(hex_decode(kSequence32.substr(0, 32))); }
inline Nonce sequence_nonce() { return Nonce(hex_decode(kSequence32.substr(0, 32))); }

template <Fault F>
bool embedded_vector_passes(const EmbeddedVector& v) {
  const Bytes pt = hex_decode(v.pt);
  const Bytes ad = hex_decode(v.ad);
  const Bytes expected = hex_decode(v.ct_and_tag);
  const Sealed sealed = encrypt_with<F>(*v.params, sequence_key(), sequence_nonce(), ad, pt);
  Bytes got = sealed.ciphertext;
  got.insert(got.end(), sealed.tag.bytes().begin(), sealed.tag.bytes().end());
  if (got != expected) {
    return false;
  }
  const auto opened = decrypt_with<F>(*v.params, sequence_key(), sequence_nonce(), ad,
                                      sealed.ciphertext, sealed.tag);
  return opened && *opened == pt;
}

inline Bytes selftest_message(std::size_t length) {
  Bytes out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out[i] = static_cast<std::uint8_t>(0xA5 ^ (i * 7));
  }
  return out;
}

template <Fault F>
bool round_trip_passes(const VariantParams& params) {
  const Bytes pt = selftest_message(45);
  const Bytes ad = selftest_message(19);
  const Sealed sealed = encrypt_with<F>(params, sequence_key(), sequence_nonce(), ad, pt);
  const auto opened =
      decrypt_with<F>(params, sequence_key(), sequence_nonce(), ad, sealed.ciphertext, sealed.tag);
  return sealed.ciphertext.size() == pt.size() && opened && *opened == pt;
}

template <Fault F>
bool tamper_rejected(const VariantParams& params) {
  const Bytes pt = selftest_message(21);
  const Sealed sealed = encrypt_with<F>(params, sequence_key(), sequence_nonce(), {}, pt);
  Bytes ct = sealed.ciphertext;
  ct[ct.size() / 2] ^= 0x01;
  return !decrypt_with<F>(params, sequence_key(), sequence_nonce(), {}, ct, sealed.tag);
}

// Evaluates the production circuit on each 5-bit input (broadcast over all
// 64 slices) and checks that all 32 outputs are distinct.
inline bool sbox_is_bijective() {
  std::array<bool, 32> seen{};
  for (unsigned x = 0; x < 32; ++x) {
    State in;
    for (std::size_t w = 0; w < State::kWords; ++w) {
      in.set_word(w, ((x >> (4 - w)) & 1) ? ~std::uint64_t{0} : 0);
    }
    const State out = sbox_words(in);
    unsigned y = 0;
    for (std::size_t w = 0; w < State::kWords; ++w) {
      const std::uint64_t word = out[w];
      if (word != 0 && word != ~std::uint64_t{0}) {
        return false;
      }
      y = (y << 1) | (word & 1);
    }
    if (seen[y]) {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

template <Fault F>
std::vector<SelftestCheck> run_selftest_with() {
  std::vector<SelftestCheck> checks;
  for (const EmbeddedVector& v : kEmbeddedVectors) {
    checks.push_back({std::string(v.name), embedded_vector_passes<F>(v)});
  }
  for (const VariantParams* params : {&kAscon128, &kAscon128a}) {
    checks.push_back({std::string(params->name) + " round trip", round_trip_passes<F>(*params)});
    checks.push_back({std::string(params->name) + " tamper rejection", tamper_rejected<F>(*params)});
  }
  checks.push_back({"S-box bijectivity", sbox_is_bijective()});
  return checks;
}

}  // namespace ascon::detail
