#include "perfcubes/records.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace perfcubes {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::set<std::string>& record_keys() {
  static const std::set<std::string> keys{"p",  "N", "kind", "bases", "nonzero_count", "cancelled_pair",
                                          "verified"};
  return keys;
}

std::string join_bases(const std::vector<std::string>& bases) {
  std::string out;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (i != 0) out += '+';
    out += bases[i];
  }
  return out;
}

std::vector<std::string> to_strings(std::span<const Natural> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const Natural& v : values) out.push_back(v.to_string());
  return out;
}

std::uint64_t parse_u64(std::string_view text, const std::string& field, std::size_t line) {
  try {
    return Natural::parse(text).to_u64();
  } catch (const std::exception& e) {
    throw RecordParseError(field, e.what(), line);
  }
}

bool parse_bool(std::string_view text, const std::string& field, std::size_t line) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw RecordParseError(field, "expected true or false, got '" + std::string(text) + "'", line);
}

// Integers are written as strings; bare JSON numbers are accepted on input.
std::uint64_t json_u64(const ordered_json& j, const std::string& field, std::size_t line) {
  if (j.is_string()) return parse_u64(j.get<std::string>(), field, line);
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  throw RecordParseError(field, "expected a decimal string", line);
}

DecompositionRecord record_from_json(const ordered_json& j, std::size_t line) {
  if (!j.is_object()) throw RecordParseError("record", "expected a JSON object", line);
  for (const auto& [key, value] : j.items()) {
    if (!record_keys().contains(key)) throw RecordParseError(key, "unexpected key", line);
  }
  for (const auto& key : record_keys()) {
    if (!j.contains(key)) throw RecordParseError(key, "missing key", line);
  }

  DecompositionRecord r;
  const std::uint64_t p = json_u64(j["p"], "p", line);
  if (p > std::numeric_limits<std::uint32_t>::max()) throw RecordParseError("p", "out of range", line);
  r.p = static_cast<std::uint32_t>(p);
  if (!j["N"].is_string()) throw RecordParseError("N", "expected a decimal string", line);
  r.N = j["N"].get<std::string>();
  if (!j["kind"].is_string()) throw RecordParseError("kind", "expected a string", line);
  r.kind = j["kind"].get<std::string>();
  if (!j["bases"].is_array()) throw RecordParseError("bases", "expected an array", line);
  for (const auto& b : j["bases"]) {
    if (!b.is_string()) throw RecordParseError("bases", "expected decimal strings", line);
    r.bases.push_back(b.get<std::string>());
  }
  r.nonzero_count = json_u64(j["nonzero_count"], "nonzero_count", line);
  if (!j["cancelled_pair"].is_boolean()) throw RecordParseError("cancelled_pair", "expected a boolean", line);
  r.cancelled_pair = j["cancelled_pair"].get<bool>();
  if (!j["verified"].is_boolean()) throw RecordParseError("verified", "expected a boolean", line);
  r.verified = j["verified"].get<bool>();
  return r;
}

ordered_json record_to_json(const DecompositionRecord& r) {
  ordered_json j;
  j["p"] = std::to_string(r.p);
  j["N"] = r.N;
  j["kind"] = r.kind;
  j["bases"] = r.bases;
  j["nonzero_count"] = std::to_string(r.nonzero_count);
  j["cancelled_pair"] = r.cancelled_pair;
  j["verified"] = r.verified;
  return j;
}

// RFC 4180 style: fields separated by commas, optionally wrapped in double
// quotes, with "" standing for a literal quote inside a quoted field.
std::vector<std::string> split_csv_line(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool field_was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      if (!current.empty() || field_was_quoted) throw RecordParseError("csv", "stray quote", line_no);
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
      field_was_quoted = false;
    } else {
      if (field_was_quoted) throw RecordParseError("csv", "text after closing quote", line_no);
      current += c;
    }
  }
  if (quoted) throw RecordParseError("csv", "unterminated quote", line_no);
  fields.push_back(std::move(current));
  return fields;
}

std::vector<std::string> split_bases(std::string_view joined) {
  std::vector<std::string> out;
  if (joined.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t plus = joined.find('+', start);
    out.emplace_back(joined.substr(start, plus - start));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return out;
}

DecompositionRecord record_from_csv(const std::vector<std::string>& f, std::size_t line) {
  if (f.size() != 7) {
    throw RecordParseError("csv", "expected 7 columns, got " + std::to_string(f.size()), line);
  }
  DecompositionRecord r;
  const std::uint64_t p = parse_u64(f[0], "p", line);
  if (p > std::numeric_limits<std::uint32_t>::max()) throw RecordParseError("p", "out of range", line);
  r.p = static_cast<std::uint32_t>(p);
  r.N = f[1];
  r.kind = f[2];
  r.bases = split_bases(f[3]);
  r.nonzero_count = parse_u64(f[4], "nonzero_count", line);
  r.cancelled_pair = parse_bool(f[5], "cancelled_pair", line);
  r.verified = parse_bool(f[6], "verified", line);
  return r;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

void emit_csv_row(std::ostream& out, std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (std::string_view f : fields) {
    if (!first) out << ',';
    first = false;
    out << f;
  }
  out << '\n';
}

std::string csv_quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

ordered_json representations_json(const SearchReport& report) {
  ordered_json reps = ordered_json::array();
  for (const Representation& r : report.representations) reps.push_back(to_strings(r.bases));
  return reps;
}

std::string representation_field(const Representation& r) { return join_bases(to_strings(r.bases)); }

}  // namespace

std::string_view to_string(RecordFormat f) { return f == RecordFormat::jsonl ? "jsonl" : "csv"; }

RecordParseError::RecordParseError(std::string field, std::string detail, std::size_t line)
    : std::runtime_error((line != 0 ? "line " + std::to_string(line) + ": " : std::string{}) + "field '" +
                         field + "': " + detail),
      field_(std::move(field)),
      line_(line) {}

DecompositionRecord make_record(std::uint32_t p, const CubeDecomposition& d) {
  DecompositionRecord r;
  r.p = p;
  r.N = d.target().to_string();
  r.kind = std::string(to_string(d.kind()));
  r.bases = to_strings(d.bases());
  r.nonzero_count = d.nonzero_count();
  r.cancelled_pair = d.cancelled_pair();
  r.verified = verify(r);
  return r;
}

DecompositionRecord make_record(const HeathDecomposition& d) {
  if (!d.materialized) {
    throw std::invalid_argument("Heath decomposition for p = " + std::to_string(d.p) + " has " +
                                d.n.to_string() + " terms and its bases were not materialized");
  }
  DecompositionRecord r;
  r.p = d.p;
  r.N = d.target.to_string();
  r.kind = std::string(to_string(DecompositionKind::heath));
  r.bases = to_strings(d.bases);
  r.nonzero_count = d.bases.size();
  r.cancelled_pair = false;
  r.verified = verify(r);
  return r;
}

bool verify(const DecompositionRecord& record) {
  Natural target;
  try {
    target = Natural::parse(record.N);
  } catch (const std::invalid_argument& e) {
    throw RecordParseError("N", e.what());
  }
  Natural sum;
  for (std::size_t i = 0; i < record.bases.size(); ++i) {
    try {
      sum += cube(Natural::parse(record.bases[i]));
    } catch (const std::invalid_argument& e) {
      throw RecordParseError("bases[" + std::to_string(i) + "]", e.what());
    }
  }
  return sum == target;
}

void emit(std::span<const DecompositionRecord> records, RecordFormat format, std::ostream& out) {
  if (format == RecordFormat::jsonl) {
    for (const auto& r : records) out << record_to_json(r).dump() << '\n';
    return;
  }
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    emit_csv_row(out, {std::to_string(r.p), r.N, r.kind, csv_quoted(join_bases(r.bases)),
                       std::to_string(r.nonzero_count), r.cancelled_pair ? "true" : "false",
                       r.verified ? "true" : "false"});
  }
}

std::string emit(std::span<const DecompositionRecord> records, RecordFormat format) {
  std::ostringstream out;
  emit(records, format, out);
  return out.str();
}

std::vector<DecompositionRecord> parse_records(std::istream& in, RecordFormat format) {
  std::vector<DecompositionRecord> out;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = strip_cr(raw);
    if (line.empty()) continue;
    if (format == RecordFormat::jsonl) {
      ordered_json j;
      try {
        j = ordered_json::parse(line);
      } catch (const nlohmann::json::parse_error& e) {
        throw RecordParseError("json", e.what(), line_no);
      }
      out.push_back(record_from_json(j, line_no));
    } else if (!header_seen) {
      if (line != kCsvHeader) throw RecordParseError("header", "unexpected CSV header", line_no);
      header_seen = true;
    } else {
      out.push_back(record_from_csv(split_csv_line(line, line_no), line_no));
    }
  }
  if (format == RecordFormat::csv && !header_seen) throw RecordParseError("header", "missing CSV header", 1);
  return out;
}

std::vector<DecompositionRecord> parse_records(std::string_view text, RecordFormat format) {
  std::istringstream in{std::string(text)};
  return parse_records(in, format);
}

RecordFormat detect_format(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return RecordFormat::jsonl;
  return RecordFormat::csv;
}

void emit_search_report(const SearchReport& report, RecordFormat format, std::ostream& out) {
  if (format == RecordFormat::jsonl) {
    ordered_json j;
    j["target"] = report.target.to_string();
    j["k"] = std::to_string(report.k);
    j["representations"] = representations_json(report);
    j["z_range"] = {report.z_low.to_string(), report.z_high.to_string()};
    j["pairs_examined"] = std::to_string(report.pairs_examined);
    out << j.dump() << '\n';
    return;
  }
  out << "target,k,bases\n";
  for (const Representation& r : report.representations) {
    emit_csv_row(out, {report.target.to_string(), std::to_string(report.k), csv_quoted(representation_field(r))});
  }
}

void emit_scan(std::span<const ScanEntry> entries, RecordFormat format, std::ostream& out) {
  if (format == RecordFormat::jsonl) {
    for (const ScanEntry& e : entries) {
      ordered_json j;
      j["p"] = std::to_string(e.p);
      j["N"] = e.value.to_string();
      j["representable"] = e.representable;
      j["representations"] = representations_json(e.report);
      j["z_range"] = {e.report.z_low.to_string(), e.report.z_high.to_string()};
      j["pairs_examined"] = std::to_string(e.report.pairs_examined);
      out << j.dump() << '\n';
    }
    return;
  }
  out << "p,N,representable,bases\n";
  for (const ScanEntry& e : entries) {
    const std::string p = std::to_string(e.p);
    const std::string n = e.value.to_string();
    const char* flag = e.representable ? "true" : "false";
    if (e.report.representations.empty()) emit_csv_row(out, {p, n, flag, csv_quoted("")});
    for (const Representation& r : e.report.representations) {
      emit_csv_row(out, {p, n, flag, csv_quoted(representation_field(r))});
    }
  }
}

}  // namespace perfcubes
