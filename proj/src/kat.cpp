#include "ascon/kat.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "kat_impl.hpp"

namespace ascon {

namespace {

constexpr std::string_view kFieldNames[] = {"Count", "Key", "Nonce", "PT", "AD", "CT"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct PendingField {
  std::string value;
  std::size_t line;
};

class BlockBuilder {
public:
  bool empty() const { return fields_.empty(); }

  void add(std::string_view name, std::string_view value, std::size_t line) {
    if (fields_.empty()) {
      start_line_ = line;
    }
    const auto [it, inserted] =
        fields_.emplace(std::string(name), PendingField{std::string(value), line});
    if (!inserted) {
      throw KatParseError(line, std::string(name), "repeated field");
    }
  }

  KatRecord finish(std::optional<unsigned> previous_count) {
    for (const std::string_view name : kFieldNames) {
      if (fields_.find(std::string(name)) == fields_.end()) {
        throw KatParseError(start_line_, std::string(name), "missing field");
      }
    }

    KatRecord record;
    const PendingField& count = fields_.at("Count");
    const char* begin = count.value.data();
    const char* end = begin + count.value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, record.count);
    if (ec != std::errc() || ptr != end || count.value.empty()) {
      throw KatParseError(count.line, "Count", "expected a decimal count");
    }
    if (!previous_count ? record.count != 1 : record.count <= *previous_count) {
      throw KatParseError(count.line, "Count",
                          "counts must start at 1 and strictly increase");
    }

    const Bytes key = decode("Key");
    const Bytes nonce = decode("Nonce");
    if (key.size() != kBlock128Bytes) {
      throw KatParseError(fields_.at("Key").line, "Key", "expected 16 octets");
    }
    if (nonce.size() != kBlock128Bytes) {
      throw KatParseError(fields_.at("Nonce").line, "Nonce", "expected 16 octets");
    }
    std::copy(key.begin(), key.end(), record.key.begin());
    std::copy(nonce.begin(), nonce.end(), record.nonce.begin());
    record.pt = decode("PT");
    record.ad = decode("AD");
    record.ct_and_tag = decode("CT");
    if (record.ct_and_tag.size() != record.pt.size() + kBlock128Bytes) {
      throw KatParseError(fields_.at("CT").line, "CT",
                          "length must equal |PT| + 16 octets");
    }

    fields_.clear();
    return record;
  }

private:
  Bytes decode(const std::string& name) const {
    const PendingField& field = fields_.at(name);
    try {
      return hex_decode(field.value);
    } catch (const HexError& e) {
      throw KatParseError(field.line, name, e.what());
    }
  }

  std::map<std::string, PendingField> fields_;
  std::size_t start_line_ = 0;
};

}  // namespace

KatParseError::KatParseError(std::size_t line, std::string field, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (field.empty() ? std::string() : " (" + field + ")") + ": " +
                         message),
      line_(line),
      field_(std::move(field)) {}

std::vector<KatRecord> parse_kat_file(std::istream& in) {
  std::vector<KatRecord> records;
  BlockBuilder block;
  std::optional<unsigned> previous;

  const auto flush = [&] {
    if (!block.empty()) {
      records.push_back(block.finish(previous));
      previous = records.back().count;
    }
  };

  std::string raw;
  std::size_t line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    const std::string_view line = trim(raw);
    if (line.empty()) {
      flush();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw KatParseError(line_number, "", "expected '<field> = <value>'");
    }
    const std::string_view name = trim(line.substr(0, eq));
    if (std::find(std::begin(kFieldNames), std::end(kFieldNames), name) ==
        std::end(kFieldNames)) {
      throw KatParseError(line_number, std::string(name), "unknown field");
    }
    block.add(name, trim(line.substr(eq + 1)), line_number);
  }
  flush();
  return records;
}

std::vector<KatRecord> parse_kat_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_kat_file(in);
}

std::string_view to_string(KatDirection direction) {
  return direction == KatDirection::encrypt ? "encrypt" : "decrypt";
}

std::string_view to_string(KatField field) {
  switch (field) {
    case KatField::ct:
      return "CT";
    case KatField::tag:
      return "TAG";
    case KatField::pt:
      return "PT";
  }
  return "?";
}

KatReport run_kat(const std::vector<KatRecord>& records, const VariantParams& params) {
  return detail::run_kat_with<detail::Fault::none>(records, params);
}

std::string format_failure(const KatFailure& failure) {
  std::string out = "FAIL count=" + std::to_string(failure.count) + " dir=";
  out += to_string(failure.direction);
  out += " field=";
  out += to_string(failure.field);
  return out;
}

void write_report(std::ostream& out, const KatReport& report) {
  out << "total=" << report.total << " passed=" << report.passed
      << " failed=" << report.failed << '\n';
  for (const KatFailure& failure : report.failures) {
    out << format_failure(failure) << '\n';
  }
}

}  // namespace ascon
