#include "perfcubes/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "perfcubes/construct.hpp"
#include "perfcubes/heath.hpp"
#include "perfcubes/perfect.hpp"
#include "perfcubes/records.hpp"
#include "perfcubes/search.hpp"

namespace perfcubes::cli {

namespace {

enum class OutputFormat { jsonl, csv, pretty };

struct Config {
  std::string format;  // empty: command default
  std::string output_path;
  bool force = false;
  std::string threads = "auto";
  std::string backend = "auto";

  std::uint32_t max_p = 0;
  std::uint32_t p = 0;
  std::string method;
  std::string target;
  unsigned k = 0;
  std::string input_path;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat resolve_format(const Config& cfg, OutputFormat fallback) {
  if (cfg.format.empty()) return fallback;
  if (cfg.format == "jsonl") return OutputFormat::jsonl;
  if (cfg.format == "csv") return OutputFormat::csv;
  return OutputFormat::pretty;
}

RecordFormat machine_format(OutputFormat f) {
  return f == OutputFormat::csv ? RecordFormat::csv : RecordFormat::jsonl;
}

SearchOptions search_options(const Config& cfg) {
  SearchOptions opt;
  opt.force = cfg.force;
  if (cfg.threads == "auto") {
    opt.threads = 0;
  } else {
    try {
      std::size_t used = 0;
      const unsigned long n = std::stoul(cfg.threads, &used);
      if (used != cfg.threads.size() || n == 0) throw std::invalid_argument("threads");
      opt.threads = static_cast<unsigned>(n);
    } catch (const std::exception&) {
      throw UsageError("--threads expects a positive integer or 'auto', got '" + cfg.threads + "'");
    }
  }
  if (cfg.backend != "auto") {
    const auto b = simd::parse_backend(cfg.backend);
    if (!b) throw UsageError("unknown backend '" + cfg.backend + "'");
    if (!simd::is_supported(*b)) throw UsageError("backend '" + cfg.backend + "' is not supported on this machine");
    opt.backend = *b;
  }
  return opt;
}

MersenneExponent exponent_or_usage(std::uint32_t p) {
  try {
    return MersenneExponent::make(p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--p ") + std::to_string(p) + ": " + e.what());
  }
}

std::size_t max_width(const std::vector<std::string>& items) {
  std::size_t w = 0;
  for (const auto& s : items) w = std::max(w, s.size());
  return w;
}

// One row per representation, each column right-aligned to its widest base.
void print_aligned_sums(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                        std::string_view indent) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  for (const auto& row : rows) {
    out << indent;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i != 0) out << " + ";
      out << std::setw(static_cast<int>(widths[i])) << row[i] << "^3";
    }
    out << '\n';
  }
}

std::vector<std::vector<std::string>> base_rows(const std::vector<Representation>& reps) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(reps.size());
  for (const auto& r : reps) {
    std::vector<std::string> row;
    for (const auto& b : r.bases) row.push_back(b.to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_record_pretty(std::ostream& out, const DecompositionRecord& r) {
  out << "p: " << r.p << '\n'
      << "N: " << r.N << '\n'
      << "kind: " << r.kind << '\n'
      << "bases: " << r.bases.size() << " (" << r.nonzero_count << " nonzero)"
      << (r.cancelled_pair ? ", cancelled pair" : "") << '\n';
  const int width = static_cast<int>(max_width(r.bases));
  for (const auto& b : r.bases) out << "  " << std::setw(width) << b << "^3\n";
  out << "verified: " << (r.verified ? "true" : "false") << '\n';
}

void print_report_pretty(std::ostream& out, const SearchReport& report) {
  out << "target: " << report.target << '\n'
      << "k: " << report.k << '\n'
      << "range: " << report.z_low << ".." << report.z_high << '\n'
      << "pairs examined: " << report.pairs_examined << '\n'
      << "backend: " << simd::to_string(report.backend) << '\n'
      << "elapsed: " << std::fixed << std::setprecision(6)
      << std::chrono::duration<double>(report.elapsed).count() << " s\n"
      << "representations: " << report.representations.size() << '\n';
  print_aligned_sums(out, base_rows(report.representations), "  ");
}

int cmd_generate(const Config& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, OutputFormat::jsonl);
  if (cfg.max_p < 2) throw UsageError("--max-p must be at least 2");
  const auto exponents = mersenne_exponents_up_to(cfg.max_p);

  std::vector<std::pair<const MersenneExponent*, std::string>> rows;
  for (const auto& e : exponents) rows.emplace_back(&e, even_perfect(e).value.to_string());

  auto k_text = [](const MersenneExponent& e) { return e.k() ? std::to_string(*e.k()) : std::string{}; };

  switch (format) {
    case OutputFormat::jsonl:
      for (const auto& [e, n] : rows) {
        nlohmann::ordered_json j;
        j["p"] = std::to_string(e->p());
        j["N"] = n;
        j["residue_class"] = std::string(to_string(e->residue_class()));
        j["k"] = e->k() ? nlohmann::ordered_json(k_text(*e)) : nlohmann::ordered_json(nullptr);
        out << j.dump() << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "p,N,residue_class,k\n";
      for (const auto& [e, n] : rows) {
        out << e->p() << ',' << n << ',' << to_string(e->residue_class()) << ',' << k_text(*e) << '\n';
      }
      break;
    case OutputFormat::pretty: {
      std::size_t pw = 1;
      std::size_t nw = 1;
      for (const auto& [e, n] : rows) {
        pw = std::max(pw, std::to_string(e->p()).size());
        nw = std::max(nw, n.size());
      }
      out << std::setw(static_cast<int>(pw)) << "p" << "  " << std::setw(static_cast<int>(nw)) << "N" << '\n';
      for (const auto& [e, n] : rows) {
        out << std::setw(static_cast<int>(pw)) << e->p() << "  " << std::setw(static_cast<int>(nw)) << n << '\n';
      }
      break;
    }
  }
  return kSuccess;
}

int cmd_decompose(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto format = resolve_format(cfg, OutputFormat::jsonl);
  const MersenneExponent e = exponent_or_usage(cfg.p);
  if (e.p() == 2) throw UsageError("p = 2 (N = 6) has no decomposition of this kind");
  const EvenPerfect perfect = even_perfect(e);

  DecompositionRecord record;
  if (cfg.method == "heath") {
    const auto limit = cfg.force ? std::numeric_limits<std::uint64_t>::max() : kHeathMaterializeLimit;
    const HeathDecomposition d = heath_decompose(perfect, limit);
    if (!d.materialized) {
      if (format == OutputFormat::pretty) {
        out << "p: " << e.p() << '\n'
            << "N: " << d.target << '\n'
            << "kind: heath\n"
            << "n: " << d.n << " (1^3 + 3^3 + ... + (2n-1)^3)\n"
            << "closed form n^2 (2n^2 - 1) = N: " << (verify_closed_form(d) ? "true" : "false") << '\n';
        return verify_closed_form(d) ? kSuccess : kFailure;
      }
      err << "error: the Heath decomposition for p = " << e.p() << " has " << d.n
          << " terms, above the record limit of " << kHeathMaterializeLimit << "; pass --force to emit it\n";
      return kBoundExceeded;
    }
    record = make_record(d);
  } else {
    record = make_record(e.p(), constructive_decompose(perfect));
  }

  if (!record.verified) {
    err << "error: decomposition for p = " << e.p() << " failed verification\n";
    return kFailure;
  }
  if (format == OutputFormat::pretty) {
    print_record_pretty(out, record);
  } else {
    emit(std::span(&record, 1), machine_format(format), out);
  }
  return kSuccess;
}

int cmd_search(const Config& cfg, std::ostream& out) {
  const auto format = resolve_format(cfg, OutputFormat::jsonl);
  Natural target;
  try {
    target = Natural::parse(cfg.target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--target: ") + e.what());
  }
  const SearchOptions opt = search_options(cfg);
  const SearchReport report = cfg.k == 2 ? search_two_cubes(target, opt) : search_three_cubes(target, opt);
  if (format == OutputFormat::pretty) {
    print_report_pretty(out, report);
  } else {
    emit_search_report(report, machine_format(format), out);
  }
  return kSuccess;
}

int cmd_scan(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto format = resolve_format(cfg, OutputFormat::jsonl);
  if (cfg.max_p < 2) throw UsageError("--max-p must be at least 2");
  const SearchOptions opt = search_options(cfg);
  const Natural limit = three_cube_search_limit();

  std::vector<MersenneExponent> in_bounds;
  for (const auto& e : mersenne_exponents_up_to(cfg.max_p)) {
    if (e.p() == 2) continue;
    if (!cfg.force && even_perfect(e).value >= limit) {
      err << "note: skipping p = " << e.p() << ", N is not below the 3-cube search limit " << limit
          << " (use --force)\n";
      continue;
    }
    in_bounds.push_back(e);
  }

  const auto entries = conjecture_scan(in_bounds, opt);
  const bool all_representable =
      std::all_of(entries.begin(), entries.end(), [](const ScanEntry& s) { return s.representable; });

  if (format == OutputFormat::pretty) {
    for (const auto& s : entries) {
      out << "p = " << s.p << ", N = " << s.value << ": "
          << (s.representable ? "representable" : "COUNTEREXAMPLE CANDIDATE") << ", "
          << s.report.representations.size() << " representation(s), " << s.report.pairs_examined
          << " pairs examined\n";
      print_aligned_sums(out, base_rows(s.report.representations), "    ");
    }
  } else {
    emit_scan(entries, machine_format(format), out);
  }
  return all_representable ? kSuccess : kFailure;
}

int cmd_table(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto format = resolve_format(cfg, OutputFormat::pretty);
  const SearchOptions opt = search_options(cfg);

  std::vector<DecompositionRecord> records;
  for (const auto& e : mersenne_exponents_up_to(17)) {
    if (e.p() == 2) continue;
    const EvenPerfect perfect = even_perfect(e);
    std::optional<CubeDecomposition> d = constructive_decompose(perfect);
    if (d->nonzero_count() > 3) {
      const SearchReport report = search_three_cubes(perfect.value, opt);
      if (report.representations.empty()) {
        err << "error: no 3-cube representation of " << perfect.value << " found\n";
        return kFailure;
      }
      d = CubeDecomposition::from_terms(perfect.value, report.representations.front().bases,
                                        DecompositionKind::searched);
    }
    records.push_back(make_record(e.p(), *d));
    if (!records.back().verified) {
      err << "error: table row for p = " << e.p() << " failed verification\n";
      return kFailure;
    }
  }

  if (format != OutputFormat::pretty) {
    emit(records, machine_format(format), out);
    return kSuccess;
  }
  for (const auto& r : records) {
    // Three nonzero-or-padding terms: the last three of the sorted bases.
    out << r.N << " = 2^" << (r.p - 1) << " (2^" << r.p << " - 1) = ";
    for (std::size_t i = r.bases.size() - 3; i < r.bases.size(); ++i) {
      if (i != r.bases.size() - 3) out << " + ";
      out << r.bases[i] << "^3";
    }
    out << '\n';
  }
  return kSuccess;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + cfg.input_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  RecordFormat format = detect_format(text);
  if (cfg.format == "csv") format = RecordFormat::csv;
  if (cfg.format == "jsonl") format = RecordFormat::jsonl;

  std::vector<DecompositionRecord> records;
  try {
    records = parse_records(text, format);
  } catch (const RecordParseError& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }

  std::size_t passed = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    bool ok = false;
    std::string why;
    try {
      ok = verify(r);
      if (!ok) why = "sum of cubes differs from N";
    } catch (const RecordParseError& e) {
      why = e.what();
    }
    out << (ok ? "ok  " : "FAIL") << "  record " << (i + 1) << "  p=" << r.p << "  kind=" << r.kind
        << "  N=" << r.N;
    if (!ok) out << "  (" << why << ')';
    out << '\n';
    if (ok) ++passed;
  }
  out << "verified " << passed << '/' << records.size() << " records\n";
  return passed == records.size() ? kSuccess : kFailure;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Even perfect numbers as sums of cubes", "perfcubes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format (default: pretty for table, jsonl otherwise)")
      ->check(CLI::IsMember({"jsonl", "csv", "pretty"}));
  app.add_option("-o,--output", cfg.output_path, "Write output to this file instead of stdout");
  app.add_flag("--force", cfg.force, "Allow searches and records beyond the default size limits");
  app.add_option("--threads", cfg.threads, "Search worker threads, or 'auto'");
  app.add_option("--backend", cfg.backend, "Pair-scan kernel: auto, scalar, avx2, avx512, neon");

  auto* generate = app.add_subcommand("generate", "List Mersenne exponents and even perfect numbers");
  generate->add_option("--max-p", cfg.max_p, "Largest exponent")->required();

  auto* decompose = app.add_subcommand("decompose", "Decompose one even perfect number into cubes");
  decompose->add_option("--p", cfg.p, "Mersenne exponent")->required();
  decompose->add_option("--method", cfg.method, "heath or construct")
      ->required()
      ->check(CLI::IsMember({"heath", "construct"}));

  auto* search = app.add_subcommand("search", "All representations of a target as a sum of k cubes");
  search->add_option("--target", cfg.target, "Decimal target")->required();
  search->add_option("--k", cfg.k, "Number of cubes (2 or 3)")->required()->check(CLI::IsMember({2u, 3u}));

  auto* scan = app.add_subcommand("scan", "Three-cube search over even perfect numbers");
  scan->add_option("--max-p", cfg.max_p, "Largest exponent")->required();

  auto* table = app.add_subcommand("table", "Three-cube representations of the first five even perfect numbers above 6");

  auto* verify_cmd = app.add_subcommand("verify", "Re-verify a JSONL or CSV record file");
  verify_cmd->add_option("--input", cfg.input_path, "Record file")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kUsage;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* sink = &out;
  if (!cfg.output_path.empty()) {
    file = std::make_unique<std::ofstream>(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!*file) {
      err << "error: cannot open '" << cfg.output_path << "' for writing\n";
      return kUsage;
    }
    sink = file.get();
  }

  try {
    if (*generate) return cmd_generate(cfg, *sink);
    if (*decompose) return cmd_decompose(cfg, *sink, err);
    if (*search) return cmd_search(cfg, *sink);
    if (*scan) return cmd_scan(cfg, *sink, err);
    if (*table) return cmd_table(cfg, *sink, err);
    if (*verify_cmd) return cmd_verify(cfg, *sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBoundExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace perfcubes::cli
