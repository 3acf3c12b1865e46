// ascon: one-shot ASCON-128/128a encryption, KAT runner, self-test and
// permutation tracer.
//
// Keys are taken from flags or files only. That is fine for test vectors and
// demos, not for protecting real secrets.
//
// Exit codes: 0 success, 2 usage, 3 I/O, 4 authentication failure,
// 5 verification/KAT failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "ascon/aead.hpp"
#include "ascon/codec.hpp"
#include "ascon/kat.hpp"
#include "ascon/permutation.hpp"
#include "ascon/selftest.hpp"

namespace {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitIo = 3,
  kExitAuth = 4,
  kExitVerify = 5,
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string variant = "ascon128";
  std::optional<std::string> key_hex, key_file;
  std::optional<std::string> nonce_hex;
  bool gen_nonce = false;
  std::optional<std::string> ad_hex, ad_file;
  std::optional<std::string> in_path, pt_hex, ct_hex, tag_hex;
  std::string out_path;
  std::optional<std::string> state_hex;
  unsigned rounds = 12;
  bool unsafe_trace = false;
  int verbosity = 0;
};

ascon::Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path);
  }
  ascon::Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("cannot read " + path);
  }
  return data;
}

void write_output(const std::string& path, ascon::ByteView data) {
  if (path.empty()) {
    std::cout.write(reinterpret_cast<const char*>(data.data()),
                    static_cast<std::streamsize>(data.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path + " for writing");
  }
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) {
    throw IoError("cannot write " + path);
  }
}

void write_text(const std::string& path, const std::string& text) {
  write_output(path, ascon::ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

// Error messages carry the flag name and position only, never the value.
ascon::Bytes decode_flag(const std::string& flag, const std::string& text) {
  try {
    return ascon::hex_decode(text);
  } catch (const ascon::HexError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

const ascon::VariantParams& resolve_variant(const Options& opts) {
  const auto variant = ascon::parse_variant(opts.variant);
  if (!variant) {
    throw UsageError("--variant must be ascon128 or ascon128a");
  }
  return ascon::params_for(*variant);
}

ascon::Key resolve_key(const Options& opts) {
  ascon::Bytes raw;
  if (opts.key_hex.has_value()) {
    raw = decode_flag("--key", *opts.key_hex);
    if (raw.size() != ascon::kBlock128Bytes) {
      ascon::secure_wipe(raw);
      throw UsageError("--key must be 16 octets (32 hex digits)");
    }
  } else if (opts.key_file.has_value()) {
    raw = read_file(*opts.key_file);
    if (raw.size() != ascon::kBlock128Bytes) {
      ascon::secure_wipe(raw);
      throw UsageError("--key-file must contain exactly 16 raw octets");
    }
  } else {
    throw UsageError("missing key: pass --key or --key-file");
  }
  ascon::Key key(raw);
  ascon::secure_wipe(raw);
  return key;
}

ascon::Nonce nonce_from_hex(const Options& opts) {
  const ascon::Bytes raw = decode_flag("--nonce", *opts.nonce_hex);
  if (raw.size() != ascon::kBlock128Bytes) {
    throw UsageError("--nonce must be 16 octets (32 hex digits)");
  }
  return ascon::Nonce(raw);
}

ascon::Nonce resolve_nonce(const Options& opts, bool allow_generate) {
  if (opts.nonce_hex.has_value()) {
    return nonce_from_hex(opts);
  }
  if (allow_generate && opts.gen_nonce) {
    std::random_device rd;
    std::array<std::uint8_t, ascon::kBlock128Bytes> bytes{};
    for (std::size_t i = 0; i < bytes.size(); i += 4) {
      const std::uint32_t r = rd();
      for (std::size_t j = 0; j < 4; ++j) {
        bytes[i + j] = static_cast<std::uint8_t>(r >> (8 * j));
      }
    }
    ascon::Nonce nonce(bytes);
    std::cerr << "NONCE=" << ascon::hex_encode(nonce.bytes()) << '\n';
    return nonce;
  }
  throw UsageError(allow_generate ? "missing nonce: pass --nonce or --gen-nonce"
                                  : "missing nonce: pass --nonce");
}

ascon::Bytes resolve_ad(const Options& opts) {
  if (opts.ad_hex.has_value()) return decode_flag("--ad", *opts.ad_hex);
  if (opts.ad_file.has_value()) return read_file(*opts.ad_file);
  return {};
}

int cmd_encrypt(const Options& opts) {
  const ascon::VariantParams& params = resolve_variant(opts);
  const ascon::Key key = resolve_key(opts);
  const ascon::Bytes ad = resolve_ad(opts);
  const bool hex_mode = opts.pt_hex.has_value();
  if (!hex_mode && !opts.in_path) {
    throw UsageError("missing input: pass --pt or --in");
  }
  const ascon::Bytes pt = hex_mode ? decode_flag("--pt", *opts.pt_hex) : read_file(*opts.in_path);
  const ascon::Nonce nonce = resolve_nonce(opts, true);

  if (opts.verbosity > 0) {
    std::cerr << params.name << ": " << pt.size() << " octets, " << ad.size() << " AD octets\n";
  }
  const ascon::Sealed sealed = ascon::encrypt(params, key, nonce, ad, pt);
  if (hex_mode) {
    write_text(opts.out_path, "CT=" + ascon::hex_encode(sealed.ciphertext) +
                                  "\nTAG=" + ascon::hex_encode(sealed.tag.bytes()) + "\n");
  } else {
    ascon::Bytes wire = sealed.ciphertext;
    wire.insert(wire.end(), sealed.tag.bytes().begin(), sealed.tag.bytes().end());
    write_output(opts.out_path, wire);
  }
  return kExitOk;
}

int cmd_decrypt(const Options& opts) {
  const ascon::VariantParams& params = resolve_variant(opts);
  const ascon::Key key = resolve_key(opts);
  const ascon::Nonce nonce = resolve_nonce(opts, false);
  const ascon::Bytes ad = resolve_ad(opts);

  const bool hex_mode = opts.ct_hex.has_value() || opts.tag_hex.has_value();
  ascon::Bytes ct;
  std::optional<ascon::Tag> tag;
  if (hex_mode) {
    if (!opts.tag_hex) {
      throw UsageError("hex mode needs --tag");
    }
    if (!opts.ct_hex) {
      throw UsageError("hex mode needs --ct (use --ct \"\" for an empty ciphertext)");
    }
    ct = decode_flag("--ct", *opts.ct_hex);
    const ascon::Bytes raw_tag = decode_flag("--tag", *opts.tag_hex);
    if (raw_tag.size() != ascon::kBlock128Bytes) {
      throw UsageError("--tag must be 16 octets (32 hex digits)");
    }
    tag.emplace(raw_tag);
  } else {
    if (!opts.in_path) {
      throw UsageError("missing input: pass --in or --ct/--tag");
    }
    const ascon::Bytes wire = read_file(*opts.in_path);
    if (wire.size() < ascon::kBlock128Bytes) {
      throw UsageError("input shorter than tag");
    }
    const std::size_t ct_len = wire.size() - ascon::kBlock128Bytes;
    ct.assign(wire.begin(), wire.begin() + static_cast<std::ptrdiff_t>(ct_len));
    tag.emplace(ascon::ByteView(wire).subspan(ct_len));
  }

  std::optional<ascon::Bytes> pt = ascon::decrypt(params, key, nonce, ad, ct, *tag);
  if (!pt) {
    std::cerr << "authentication failed\n";
    return kExitAuth;
  }
  if (hex_mode) {
    write_text(opts.out_path, "PT=" + ascon::hex_encode(*pt) + "\n");
  } else {
    write_output(opts.out_path, *pt);
  }
  ascon::secure_wipe(*pt);
  return kExitOk;
}

int cmd_kat(const Options& opts) {
  const ascon::VariantParams& params = resolve_variant(opts);
  if (!opts.in_path) {
    throw UsageError("missing KAT file: pass --in");
  }
  const ascon::Bytes raw = read_file(*opts.in_path);
  std::vector<ascon::KatRecord> records;
  try {
    records = ascon::parse_kat_text(std::string_view(reinterpret_cast<const char*>(raw.data()), raw.size()));
  } catch (const ascon::KatParseError& e) {
    throw UsageError(*opts.in_path + ": " + e.what());
  }
  const ascon::KatReport report = ascon::run_kat(records, params);
  if (opts.verbosity > 0) {
    std::cout << params.name << ": " << report.total << " records\n";
  }
  ascon::write_report(std::cout, report);
  return report.failed == 0 ? kExitOk : kExitVerify;
}

std::string format_state(const ascon::State& s) {
  std::string out;
  for (std::size_t i = 0; i < ascon::State::kWords; ++i) {
    out += " S" + std::to_string(i) + "=" + ascon::hex_encode(ascon::bytes_from_word(s[i]));
  }
  return out;
}

int cmd_trace(const Options& opts) {
  std::optional<ascon::RoundCount> rounds;
  try {
    rounds.emplace(opts.rounds);
  } catch (const std::invalid_argument&) {
    throw UsageError("--rounds must be 6, 8 or 12");
  }

  ascon::State state;
  std::optional<ascon::Key> key;
  if (opts.state_hex.has_value()) {
    const ascon::Bytes raw = decode_flag("--state", *opts.state_hex);
    if (raw.size() != 8 * ascon::State::kWords) {
      throw UsageError("--state must be 80 hex digits");
    }
    for (std::size_t i = 0; i < ascon::State::kWords; ++i) {
      state.set_word(i, ascon::word_from_bytes(ascon::ByteView(raw).subspan(8 * i, 8)));
    }
  } else {
    if (!opts.unsafe_trace) {
      throw UsageError("tracing a key-derived state prints key material; pass --unsafe-trace");
    }
    const ascon::VariantParams& params = resolve_variant(opts);
    key.emplace(resolve_key(opts));
    const ascon::Nonce nonce = nonce_from_hex(opts);
    const ascon::ByteView n = nonce.bytes();
    state = ascon::State(params.iv_word, key->high_word(), key->low_word(),
                         ascon::word_from_bytes(n.first(8)), ascon::word_from_bytes(n.last(8)));
  }

  const unsigned n = rounds->value();
  std::cout << "input" << format_state(state) << '\n';
  for (unsigned r = 0; r < n; ++r) {
    const unsigned index = ascon::kMaxRounds - n + r;
    const std::string label = "round " + std::to_string(r);
    state = ascon::add_round_constant(state, index);
    if (opts.verbosity > 0) std::cout << label << " post-constant" << format_state(state) << '\n';
    state = ascon::substitution_layer(state);
    if (opts.verbosity > 0) std::cout << label << " post-sbox" << format_state(state) << '\n';
    state = ascon::linear_layer(state);
    std::cout << label << (opts.verbosity > 0 ? " post-linear" : "") << format_state(state) << '\n';
  }
  if (key && n == ascon::kMaxRounds) {
    state.xor_word(3, key->high_word());
    state.xor_word(4, key->low_word());
    std::cout << "post-init" << format_state(state) << '\n';
  }
  return kExitOk;
}

int cmd_selftest() {
  const std::vector<ascon::SelftestCheck> checks = ascon::run_selftest();
  std::size_t passed = 0;
  for (const auto& check : checks) {
    std::cout << (check.passed ? "PASS " : "FAIL ") << check.name << '\n';
    passed += check.passed ? 1 : 0;
  }
  std::cout << "selftest: " << passed << "/" << checks.size() << " checks passed\n";
  return passed == checks.size() ? kExitOk : kExitVerify;
}

void add_key_options(CLI::App* cmd, Options& opts) {
  auto* key = cmd->add_option("--key", opts.key_hex, "128-bit key as 32 hex digits");
  auto* key_file = cmd->add_option("--key-file", opts.key_file, "file holding the 16 raw key octets");
  key->excludes(key_file);
}

void add_ad_options(CLI::App* cmd, Options& opts) {
  auto* ad = cmd->add_option("--ad", opts.ad_hex, "associated data as hex");
  auto* ad_file = cmd->add_option("--ad-file", opts.ad_file, "file holding the associated data");
  ad->excludes(ad_file);
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--variant", opts.variant, "ascon128 (default) or ascon128a");
  cmd->add_flag("-v,--verbose", opts.verbosity, "more output");
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"ASCON-128 / ASCON-128a authenticated encryption"};
  app.require_subcommand(1);

  auto* encrypt = app.add_subcommand("encrypt", "encrypt --pt HEX or --in FILE");
  add_common(encrypt, opts);
  add_key_options(encrypt, opts);
  auto* nonce = encrypt->add_option("--nonce", opts.nonce_hex, "128-bit nonce as 32 hex digits");
  auto* gen = encrypt->add_flag("--gen-nonce", opts.gen_nonce, "generate a random nonce and print it");
  nonce->excludes(gen);
  add_ad_options(encrypt, opts);
  auto* enc_in = encrypt->add_option("--in", opts.in_path, "plaintext file (binary mode)");
  auto* enc_pt = encrypt->add_option("--pt", opts.pt_hex, "plaintext as hex (hex mode)");
  enc_in->excludes(enc_pt);
  encrypt->add_option("--out", opts.out_path, "output file (default stdout)");

  auto* decrypt = app.add_subcommand("decrypt", "decrypt --in FILE or --ct HEX --tag HEX");
  add_common(decrypt, opts);
  add_key_options(decrypt, opts);
  decrypt->add_option("--nonce", opts.nonce_hex, "128-bit nonce as 32 hex digits");
  add_ad_options(decrypt, opts);
  auto* dec_in = decrypt->add_option("--in", opts.in_path, "ciphertext || tag file (binary mode)");
  auto* dec_ct = decrypt->add_option("--ct", opts.ct_hex, "ciphertext as hex (hex mode)");
  auto* dec_tag = decrypt->add_option("--tag", opts.tag_hex, "tag as 32 hex digits (hex mode)");
  dec_in->excludes(dec_ct);
  dec_in->excludes(dec_tag);
  decrypt->add_option("--out", opts.out_path, "output file (default stdout)");

  auto* kat = app.add_subcommand("kat", "verify a NIST LWC KAT file");
  add_common(kat, opts);
  kat->add_option("--in", opts.in_path, "KAT file");

  auto* trace = app.add_subcommand("trace", "print the permutation state round by round");
  add_common(trace, opts);
  auto* state = trace->add_option("--state", opts.state_hex, "initial state as 80 hex digits");
  add_key_options(trace, opts);
  trace->add_option("--nonce", opts.nonce_hex, "nonce for the IV||K||N initial state");
  trace->add_option("--rounds", opts.rounds, "6, 8 or 12 (default 12)");
  trace->add_flag("--unsafe-trace", opts.unsafe_trace, "allow tracing a key-derived state");
  state->excludes("--key");
  state->excludes("--key-file");

  auto* selftest = app.add_subcommand("selftest", "run the built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (encrypt->parsed()) return cmd_encrypt(opts);
    if (decrypt->parsed()) return cmd_decrypt(opts);
    if (kat->parsed()) return cmd_kat(opts);
    if (trace->parsed()) return cmd_trace(opts);
    if (selftest->parsed()) return cmd_selftest();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
