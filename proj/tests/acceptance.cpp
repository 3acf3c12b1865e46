// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Time limits are hard limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ascon/aead.hpp"
#include "ascon/kat.hpp"
#include "ascon/permutation.hpp"
#include "cli_runner.hpp"
#include "kat_impl.hpp"
#include "oracle/fixtures.hpp"
#include "oracle/sbox_table.hpp"
#include "test_support.hpp"

using ascon::Bytes;
using ascon::State;
using ascon::VariantParams;
using ascon::detail::Fault;

namespace {

using Clock = std::chrono::steady_clock;

const VariantParams* const kVariants[] = {&ascon::kAscon128, &ascon::kAscon128a};

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> check;
};

Outcome kat_equivalence() {
  std::ostringstream detail;
  bool ok = true;
  for (const auto* params : kVariants) {
    const auto records = test_support::load_kat(*params);
    const auto report = ascon::run_kat(records, *params);
    if (params != kVariants[0]) detail << ", ";
    detail << params->name << " " << report.passed << "/" << 2 * report.total;
    ok = ok && report.total == 1089 && report.failed == 0 && report.passed == 2 * report.total;
  }
  return {ok, detail.str()};
}

Outcome round_trip() {
  std::mt19937_64 rng(0xA5C0);
  std::size_t passed = 0, total = 0;
  for (const auto* params : kVariants) {
    for (int i = 0; i < 500; ++i) {
      const ascon::Key key(test_support::random_bytes(rng, 16));
      const ascon::Nonce nonce(test_support::random_bytes(rng, 16));
      const Bytes pt = test_support::random_bytes(rng, rng() % 1025);
      const Bytes ad = test_support::random_bytes(rng, rng() % 1025);
      const auto sealed = ascon::encrypt(*params, key, nonce, ad, pt);
      const auto opened = ascon::decrypt(*params, key, nonce, ad, sealed.ciphertext, sealed.tag);
      ++total;
      if (sealed.ciphertext.size() == pt.size() && opened && *opened == pt) ++passed;
    }
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total)};
}

Outcome sbox_oracle() {
  std::mt19937_64 rng(0x5B0C);
  std::size_t matches = 0;
  for (int i = 0; i < 1000; ++i) {
    const State s = test_support::random_state(rng);
    if (ascon::substitution_layer(s) == oracle::table_substitution(s)) ++matches;
  }
  std::vector<bool> seen(32, false);
  bool bijective = true;
  for (unsigned x = 0; x < 32; ++x) {
    const unsigned y = oracle::kSboxTable[x];
    bijective = bijective && !seen[y];
    seen[y] = true;
  }
  return {matches == 1000 && bijective,
          std::to_string(matches) + "/1000 states, table " +
              (bijective ? "bijective" : "NOT bijective")};
}

void flip(Bytes& b, std::size_t bit) { b[bit / 8] ^= static_cast<std::uint8_t>(0x80 >> (bit % 8)); }

Outcome forgery_sweep() {
  std::mt19937_64 rng(0xF0F0);
  std::size_t rejected = 0, total = 0;
  std::ostringstream detail;
  for (const auto* params : kVariants) {
    const Bytes key = test_support::random_bytes(rng, 16);
    const Bytes nonce = test_support::random_bytes(rng, 16);
    const Bytes pt = test_support::random_bytes(rng, 24);
    const Bytes ad = test_support::random_bytes(rng, 13);
    const auto sealed = ascon::encrypt(*params, ascon::Key(key), ascon::Nonce(nonce), ad, pt);
    const Bytes tag(sealed.tag.bytes().begin(), sealed.tag.bytes().end());

    std::size_t variant_flips = 0;
    const auto attempt = [&](const Bytes& n, const Bytes& a, const Bytes& c, const Bytes& t) {
      ++total;
      ++variant_flips;
      if (!ascon::decrypt(*params, ascon::Key(key), ascon::Nonce(n), a, c, ascon::Tag(t))) ++rejected;
    };
    for (std::size_t bit = 0; bit < 8 * nonce.size(); ++bit) {
      Bytes n = nonce;
      flip(n, bit);
      attempt(n, ad, sealed.ciphertext, tag);
    }
    for (std::size_t bit = 0; bit < 8 * ad.size(); ++bit) {
      Bytes a = ad;
      flip(a, bit);
      attempt(nonce, a, sealed.ciphertext, tag);
    }
    for (std::size_t bit = 0; bit < 8 * pt.size(); ++bit) {
      Bytes c = sealed.ciphertext;
      flip(c, bit);
      attempt(nonce, ad, c, tag);
    }
    for (std::size_t bit = 0; bit < 8 * tag.size(); ++bit) {
      Bytes t = tag;
      flip(t, bit);
      attempt(nonce, ad, sealed.ciphertext, t);
    }
    detail << params->name << " " << variant_flips << " flips ";
  }
  detail << "rejected " << rejected << "/" << total;
  return {rejected == total && total == 2 * (128 + 104 + 192 + 128), detail.str()};
}

template <Fault F>
bool mutant_detected(const std::vector<ascon::KatRecord>& probe, const VariantParams& params) {
  return ascon::detail::run_kat_with<F>(probe, params).failed > 0;
}

Outcome mutant_detection() {
  struct Mutant {
    const char* name;
    bool (*detect)(const std::vector<ascon::KatRecord>&, const VariantParams&);
  };
  const Mutant mutants[] = {
      {"wrong round constants", mutant_detected<Fault::wrong_round_constants>},
      {"left rotation", mutant_detected<Fault::left_rotation>},
      {"missing linear-layer XOR", mutant_detected<Fault::missing_linear_xor>},
      {"missing 0*||K init XOR", mutant_detected<Fault::missing_init_key_xor>},
      {"extra permutation on last data block", mutant_detected<Fault::extra_final_data_permutation>},
      {"missing permutation after final AD block", mutant_detected<Fault::missing_final_ad_permutation>},
      {"missing domain separator", mutant_detected<Fault::missing_domain_separator>},
  };

  std::size_t detected = 0;
  std::ostringstream missed;
  for (const auto& m : mutants) {
    bool all_variants = true;
    for (const auto* params : kVariants) {
      const auto records = test_support::load_kat(*params);
      // record 1 (empty PT/AD) and the first record with non-empty AD
      std::vector<ascon::KatRecord> probe = {records[0]};
      for (const auto& r : records) {
        if (!r.ad.empty()) {
          probe.push_back(r);
          break;
        }
      }
      all_variants = all_variants && m.detect(probe, *params) &&
                     !mutant_detected<Fault::none>(probe, *params);
    }
    if (all_variants) {
      ++detected;
    } else {
      missed << " missed: " << m.name;
    }
  }
  return {detected == 7, std::to_string(detected) + "/7 detected" + missed.str()};
}

Outcome phase_fixtures() {
  struct Case {
    const VariantParams* params;
    State init, after_ad, after_data;
  };
  const Case cases[] = {
      {&ascon::kAscon128, oracle::kAscon128PostInit, oracle::kAscon128PostAd, oracle::kAscon128PostData},
      {&ascon::kAscon128a, oracle::kAscon128aPostInit, oracle::kAscon128aPostAd, oracle::kAscon128aPostData},
  };
  std::size_t matched = 0;
  for (const auto& c : cases) {
    const auto records = test_support::load_kat(*c.params);
    const auto& r = records.at(oracle::kPhaseCount - 1);
    if (r.count != oracle::kPhaseCount || r.pt.empty() || r.ad.empty()) {
      return {false, "fixture record has empty PT or AD"};
    }
    const ascon::Key key(r.key);
    const State init = ascon::initialize(*c.params, key, ascon::Nonce(r.nonce));
    const State after_ad = ascon::process_associated_data(init, *c.params, r.ad);
    const auto data = ascon::encrypt_data(after_ad, *c.params, r.pt);
    matched += (init == c.init) + (after_ad == c.after_ad) + (data.state == c.after_data);
    const ascon::Tag tag = ascon::finalize(data.state, *c.params, key);
    Bytes wire = data.data;
    wire.insert(wire.end(), tag.bytes().begin(), tag.bytes().end());
    matched += wire == r.ct_and_tag;
  }
  return {matched == 8, std::to_string(matched) + "/8 phase checks (count " +
                            std::to_string(oracle::kPhaseCount) + ")"};
}

Outcome cli_contract() {
  cli_runner::Sandbox box;
  const std::string k = "000102030405060708090A0B0C0D0E0F";
  std::vector<std::string> failures;
  const auto expect = [&](const std::string& what, bool ok) {
    if (!ok) failures.push_back(what);
  };

  const Bytes pt = ascon::hex_decode("48656C6C6F2C2041534F4E2D3132382120");
  box.write("pt.bin", pt);

  const auto hex = box.run({"encrypt", "--key", k, "--nonce", k, "--ad", "0102", "--pt", ascon::hex_encode(pt)});
  const auto file = box.run({"encrypt", "--key", k, "--nonce", k, "--ad", "0102", "--in",
                             box.path("pt.bin"), "--out", box.path("sealed.bin")});
  expect("exit 0 encrypt", hex.exit_code == 0 && file.exit_code == 0);
  const Bytes sealed = box.read("sealed.bin");
  expect("hex/file equivalence",
         sealed.size() == pt.size() + 16 &&
             hex.out == "CT=" + ascon::hex_encode(ascon::ByteView(sealed).first(pt.size())) +
                            "\nTAG=" + ascon::hex_encode(ascon::ByteView(sealed).last(16)) + "\n");

  const auto opened = box.run({"decrypt", "--key", k, "--nonce", k, "--ad", "0102", "--in",
                               box.path("sealed.bin"), "--out", box.path("opened.bin")});
  expect("exit 0 decrypt round trip", opened.exit_code == 0 && box.read("opened.bin") == pt);

  expect("exit 2 missing key",
         box.run({"encrypt", "--nonce", k, "--pt", "00"}).exit_code == 2);
  expect("exit 3 unreadable input",
         box.run({"encrypt", "--key", k, "--nonce", k, "--in", box.path("absent.bin")}).exit_code == 3);

  Bytes tampered = sealed;
  tampered.back() ^= 1;
  box.write("tampered.bin", tampered);
  const auto auth = box.run({"decrypt", "--key", k, "--nonce", k, "--ad", "0102", "--in",
                             box.path("tampered.bin"), "--out", box.path("never.bin")});
  expect("exit 4 tampered tag", auth.exit_code == 4 && !box.exists("never.bin"));

  box.write_text("corrupt.txt",
                 "Count = 1\nKey = " + k + "\nNonce = " + k +
                     "\nPT = \nAD = \nCT = E355159F292911F794CB1432A0103A8B\n");
  expect("exit 5 corrupted KAT", box.run({"kat", "--in", box.path("corrupt.txt")}).exit_code == 5);
  expect("exit 0 selftest", box.run({"selftest"}).exit_code == 0);

  std::string detail = failures.empty() ? "exit codes 0/2/3/4/5 and hex/file equivalence" : "failed:";
  for (const auto& f : failures) detail += " [" + f + "]";
  return {failures.empty(), detail};
}

Outcome throughput() {
  std::mt19937_64 rng(1);
  const Bytes pt = test_support::random_bytes(rng, 1 << 20);
  const auto start = Clock::now();
  const auto sealed = ascon::encrypt(ascon::kAscon128, test_support::sequence_key(),
                                     test_support::sequence_nonce(), {}, pt);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "1 MiB in %.3f s", seconds);
  return {sealed.ciphertext.size() == pt.size() && seconds < 1.0, buf};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "KAT equivalence (both variants, both directions, bit-exact)", 10.0, kat_equivalence},
      {"AC2", "round trip, 500 random cases per variant", 30.0, round_trip},
      {"AC3", "bitsliced S-box equals table oracle; table bijective", 5.0, sbox_oracle},
      {"AC4", "forgery sweep, every single-bit flip rejected", 10.0, forgery_sweep},
      {"AC5", "injected implementation bugs detected by KAT record 1 / first non-empty-AD record", 0.0, mutant_detection},
      {"AC6", "phase fixtures (post-init, post-AD, post-data)", 0.0, phase_fixtures},
      {"AC7", "CLI contract", 0.0, cli_contract},
      {"AC8", "throughput smoke", 0.0, throughput},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0.0 || seconds < c.limit_seconds;
    const bool ok = outcome.ok && in_time;
    failed += ok ? 0 : 1;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (ok ? "PASS " : "FAIL ") << c.id << " " << c.title << " -- " << outcome.detail
              << " (" << timing;
    if (c.limit_seconds > 0.0) std::cout << ", limit " << c.limit_seconds << "s";
    std::cout << ")\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
