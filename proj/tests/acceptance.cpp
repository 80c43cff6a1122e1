// Acceptance suite: one line per criterion, exact comparisons, each with its
// wall-clock budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "perfcubes/cli.hpp"
#include "perfcubes/construct.hpp"
#include "perfcubes/heath.hpp"
#include "perfcubes/perfect.hpp"
#include "perfcubes/records.hpp"
#include "perfcubes/search.hpp"

namespace {

using namespace perfcubes;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string run_cli(std::vector<std::string> args, int& code) {
  args.insert(args.begin(), "perfcubes");
  std::ostringstream out;
  std::ostringstream err;
  code = cli::run(args, out, err);
  return out.str();
}

Outcome table_reproduction() {
  Outcome o;
  int code = 0;
  const std::string pretty = run_cli({"table"}, code);
  o.require(code == 0, "table exited with " + std::to_string(code));
  o.require(pretty ==
                "28 = 2^2 (2^3 - 1) = 0^3 + 1^3 + 3^3\n"
                "496 = 2^4 (2^5 - 1) = 4^3 + 6^3 + 6^3\n"
                "8128 = 2^6 (2^7 - 1) = 4^3 + 4^3 + 20^3\n"
                "33550336 = 2^12 (2^13 - 1) = 16^3 + 176^3 + 304^3\n"
                "8589869056 = 2^16 (2^17 - 1) = 720^3 + 1336^3 + 1800^3\n",
            "table rows differ:\n" + pretty);

  const auto records = parse_records(run_cli({"table", "--format", "jsonl"}, code), RecordFormat::jsonl);
  o.require(code == 0 && records.size() == 5, "table --format jsonl did not yield five records");
  if (records.size() == 5) {
    const std::vector<std::string> kinds{"constructive_case_p3", "constructive_case2", "constructive_case1",
                                         "constructive_case1", "searched"};
    for (std::size_t i = 0; i < 5; ++i) {
      o.require(records[i].kind == kinds[i], "row " + std::to_string(i + 1) + " kind " + records[i].kind);
      o.require(records[i].verified && verify(records[i]), "row " + std::to_string(i + 1) + " not verified");
    }
  }
  return o;
}

Outcome construction_at_scale() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : mersenne_exponents_up_to(127)) {
    if (e.p() == 2) continue;
    const auto d = constructive_decompose(even_perfect(e));
    Natural sum;
    for (const auto& b : d.bases()) sum += cube(b);
    o.require(sum == even_perfect(e).value, "sum of cubes differs for p = " + std::to_string(e.p()));
    ++checked;
  }
  o.require(checked == 11, "expected 11 exponents, got " + std::to_string(checked));
  o.detail = o.ok ? std::to_string(checked) + " exponents, largest N has " +
                        std::to_string(even_perfect(MersenneExponent::make(127)).value.to_string().size()) +
                        " digits"
                  : o.detail;
  return o;
}

Outcome heath_theorem() {
  Outcome o;
  for (std::uint32_t p : {3u, 5u, 7u, 13u, 17u, 19u, 31u}) {
    const auto d = heath_decompose(even_perfect(MersenneExponent::make(p)));
    o.require(d.materialized && verify_by_summation(d), "literal summation fails for p = " + std::to_string(p));
  }
  for (std::uint32_t p : {61u, 89u, 107u, 127u}) {
    const auto d = heath_decompose(even_perfect(MersenneExponent::make(p)));
    o.require(verify_closed_form(d), "closed form fails for p = " + std::to_string(p));
  }
  return o;
}

Outcome identity_suites() {
  Outcome o;
  for (std::uint64_t n = 0; n <= 100'000 && o.ok; ++n) {
    o.require(identity_holds(identity_pair(Natural{n})), "two-cube identity fails at n = " + std::to_string(n));
  }
  for (std::uint64_t n = 1; n <= 10'000 && o.ok; ++n) {
    o.require(odd_cube_identity_check(Natural{n}), "odd-cube identity fails at n = " + std::to_string(n));
  }
  return o;
}

Outcome two_cube_table_check() {
  Outcome o;
  std::vector<std::uint64_t> with_rep;
  for (std::uint64_t n : {28ull, 496ull, 8128ull, 33550336ull, 8589869056ull}) {
    const auto r = search_two_cubes(Natural{n});
    if (!r.representations.empty()) {
      with_rep.push_back(n);
      o.require(r.representations.size() == 1 &&
                    r.representations[0].bases == std::vector<Natural>{Natural{1u}, Natural{3u}},
                "28 should have exactly the representation (1, 3)");
    }
  }
  o.require(with_rep == std::vector<std::uint64_t>{28}, "2-cube representations found for other targets");
  return o;
}

Outcome search_oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000 && o.ok; ++i) {
    const std::uint64_t t = rng() % 1'000'000;
    std::vector<Representation> oracle;
    for (std::uint64_t x = 0; x <= 100; ++x)
      for (std::uint64_t y = x; y <= 100; ++y)
        for (std::uint64_t z = y; z <= 100; ++z)
          if (x * x * x + y * y * y + z * z * z == t) oracle.push_back({{Natural{x}, Natural{y}, Natural{z}}});
    o.require(search_three_cubes(Natural{t}).representations == oracle,
              "mismatch against triple loop at target " + std::to_string(t));
  }
  return o;
}

Outcome mersenne_regeneration() {
  Outcome o;
  std::vector<std::uint32_t> ps;
  const auto es = mersenne_exponents_up_to(130);
  for (const auto& e : es) ps.push_back(e.p());
  o.require(ps == std::vector<std::uint32_t>{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127}, "exponent list differs");
  const std::vector<std::uint64_t> head{6, 28, 496, 8128, 33550336, 8589869056};
  for (std::size_t i = 0; i < head.size() && i < es.size(); ++i) {
    o.require(even_perfect(es[i]).value == Natural{head[i]}, "perfect number " + std::to_string(i + 1) + " differs");
  }
  return o;
}

Outcome p19_record() {
  Outcome o;
  const std::vector<MersenneExponent> es{MersenneExponent::make(19)};
  const auto entries = conjecture_scan(es);
  const auto& e = entries.front();
  std::ostringstream s;
  s << "recorded, not asserted: N = " << e.value << ", z in [" << e.report.z_low << ", " << e.report.z_high
    << "], " << e.report.representations.size() << " representation(s)";
  for (const auto& r : e.report.representations) {
    s << " (" << r.bases[0] << ", " << r.bases[1] << ", " << r.bases[2] << ")";
  }
  o.detail = s.str();
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", 10.0, table_reproduction},
      {2, "five-cube construction for all p <= 127", 1.0, construction_at_scale},
      {3, "Heath decomposition (literal and closed form)", 5.0, heath_theorem},
      {4, "identity suites (n <= 1e5 and n <= 1e4)", 30.0, identity_suites},
      {5, "two-cube check on the table's perfect numbers", 10.0, two_cube_table_check},
      {6, "three-cube search vs triple-loop oracle (1000 targets)", 60.0, search_oracle_equivalence},
      {7, "Mersenne exponent regeneration up to 130", 5.0, mersenne_regeneration},
      {8, "three-cube scan of p = 19", 60.0, p19_record},
  };

  std::printf("pair-scan backend: %s\n", std::string(simd::to_string(simd::best_backend())).c_str());
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds >= c.budget_seconds) {
      o.ok = false;
      o.detail = "over time budget of " + std::to_string(c.budget_seconds) + " s";
    }
    if (!o.ok) ++failures;
    std::printf("[%s] %d %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
