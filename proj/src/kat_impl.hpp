#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "aead_impl.hpp"
#include "ascon/kat.hpp"

namespace ascon::detail {

template <Fault F>
std::optional<KatField> check_encrypt(const KatRecord& record, const VariantParams& params) {
  const Sealed sealed = encrypt_with<F>(params, Key(record.key), Nonce(record.nonce),
                                        record.ad, record.pt);
  const ByteView expected(record.ct_and_tag);
  const ByteView expected_ct = expected.first(record.pt.size());
  const ByteView expected_tag = expected.subspan(record.pt.size());
  if (!std::equal(sealed.ciphertext.begin(), sealed.ciphertext.end(),
                  expected_ct.begin(), expected_ct.end())) {
    return KatField::ct;
  }
  if (!constant_time_equal(sealed.tag.bytes(), expected_tag)) {
    return KatField::tag;
  }
  return std::nullopt;
}

template <Fault F>
std::optional<KatField> check_decrypt(const KatRecord& record, const VariantParams& params) {
  const ByteView sealed(record.ct_and_tag);
  const std::size_t ct_len = sealed.size() - kBlock128Bytes;
  const std::optional<Bytes> opened =
      decrypt_with<F>(params, Key(record.key), Nonce(record.nonce), record.ad,
                      sealed.first(ct_len), Tag(sealed.subspan(ct_len)));
  if (!opened) {
    return KatField::tag;
  }
  if (*opened != record.pt) {
    return KatField::pt;
  }
  return std::nullopt;
}

template <Fault F>
KatReport run_kat_with(const std::vector<KatRecord>& records, const VariantParams& params) {
  KatReport report;
  report.total = records.size();
  for (const KatRecord& record : records) {
    const std::pair<KatDirection, std::optional<KatField>> outcomes[] = {
        {KatDirection::encrypt, check_encrypt<F>(record, params)},
        {KatDirection::decrypt, check_decrypt<F>(record, params)},
    };
    for (const auto& [direction, field] : outcomes) {
      if (field) {
        ++report.failed;
        report.failures.push_back({record.count, direction, *field});
      } else {
        ++report.passed;
      }
    }
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const KatFailure& a, const KatFailure& b) { return a.count < b.count; });
  return report;
}

}  // namespace ascon::detail
