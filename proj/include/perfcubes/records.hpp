#pragma once

// Serialization and independent re-verification of decomposition results.
//
// Every integer is written as a decimal string so that no consumer loses
// precision, whatever its native integer width.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "perfcubes/construct.hpp"
#include "perfcubes/heath.hpp"
#include "perfcubes/search.hpp"

namespace perfcubes {

struct DecompositionRecord {
  std::uint32_t p = 0;
  std::string N;
  std::string kind;
  std::vector<std::string> bases;
  std::uint64_t nonzero_count = 0;
  bool cancelled_pair = false;
  bool verified = false;

  friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

enum class RecordFormat { jsonl, csv };

std::string_view to_string(RecordFormat f);

/// A field that could not be read. `line` is 1-based, 0 when unknown.
class RecordParseError : public std::runtime_error {
 public:
  RecordParseError(std::string field, std::string detail, std::size_t line = 0);

  const std::string& field() const noexcept { return field_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

/// Builds the record and sets `verified` from an independent re-summation.
DecompositionRecord make_record(std::uint32_t p, const CubeDecomposition& d);
/// Throws std::invalid_argument when the bases were not materialized.
DecompositionRecord make_record(const HeathDecomposition& d);

/// True iff the cubes of `bases` sum to N, recomputed from the strings.
/// Throws RecordParseError naming the first field that is not a canonical
/// decimal natural.
bool verify(const DecompositionRecord& record);

/// JSONL: one object per line with keys p, N, kind, bases, nonzero_count,
/// cancelled_pair, verified. CSV: a header row, then the same columns with
/// bases joined by '+' in one quoted field.
void emit(std::span<const DecompositionRecord> records, RecordFormat format, std::ostream& out);
std::string emit(std::span<const DecompositionRecord> records, RecordFormat format);

std::vector<DecompositionRecord> parse_records(std::istream& in, RecordFormat format);
std::vector<DecompositionRecord> parse_records(std::string_view text, RecordFormat format);

/// Guesses the format from the first non-empty line: '{' means JSONL.
RecordFormat detect_format(std::string_view text);

inline constexpr std::string_view kCsvHeader = "p,N,kind,bases,nonzero_count,cancelled_pair,verified";

/// Machine-readable search reports. The elapsed time is left out so output
/// is reproducible.
void emit_search_report(const SearchReport& report, RecordFormat format, std::ostream& out);
void emit_scan(std::span<const ScanEntry> entries, RecordFormat format, std::ostream& out);

}  // namespace perfcubes
