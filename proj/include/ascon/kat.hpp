#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ascon/aead.hpp"
#include "ascon/codec.hpp"

// Known-answer tests in the NIST LWC genkat text format:
//
//   Count = 1
//   Key = 000102030405060708090A0B0C0D0E0F
//   Nonce = 000102030405060708090A0B0C0D0E0F
//   PT =
//   AD =
//   CT = E355159F292911F794CB1432A0103A8A
//
// Blocks are separated by blank lines; CT holds ciphertext || 16-octet tag.
namespace ascon {

struct KatRecord {
  unsigned count = 0;
  std::array<std::uint8_t, kBlock128Bytes> key{};
  std::array<std::uint8_t, kBlock128Bytes> nonce{};
  Bytes pt;
  Bytes ad;
  Bytes ct_and_tag;

  friend bool operator==(const KatRecord&, const KatRecord&) = default;
};

class KatParseError : public std::runtime_error {
public:
  KatParseError(std::size_t line, std::string field, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

private:
  std::size_t line_;
  std::string field_;
};

// Throws KatParseError on a malformed line, a missing or repeated field, bad
// hex, wrong key/nonce length, |CT| != |PT| + 16, or counts that do not start
// at 1 and strictly increase.
std::vector<KatRecord> parse_kat_file(std::istream& in);
std::vector<KatRecord> parse_kat_text(std::string_view text);

enum class KatDirection { encrypt, decrypt };
enum class KatField { ct, tag, pt };

std::string_view to_string(KatDirection direction);
std::string_view to_string(KatField field);

struct KatFailure {
  unsigned count;
  KatDirection direction;
  KatField field;  // first divergent field only

  friend bool operator==(const KatFailure&, const KatFailure&) = default;
};

struct KatReport {
  std::size_t total = 0;   // records
  std::size_t passed = 0;  // directions; passed + failed == 2 * total
  std::size_t failed = 0;
  std::vector<KatFailure> failures;  // sorted by count, encrypt before decrypt

  friend bool operator==(const KatReport&, const KatReport&) = default;
};

// Encrypts and decrypts every record; mismatches are collected, never thrown.
KatReport run_kat(const std::vector<KatRecord>& records, const VariantParams& params);

// "FAIL count=<n> dir=<encrypt|decrypt> field=<CT|TAG|PT>"
std::string format_failure(const KatFailure& failure);

// Summary line "total=<n> passed=<p> failed=<f>" followed by one FAIL line per
// failure.
void write_report(std::ostream& out, const KatReport& report);

}  // namespace ascon
