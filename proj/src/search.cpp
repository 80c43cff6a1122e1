#include "perfcubes/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>

#include "perfcubes/detail/pair_scan_generic.hpp"

namespace perfcubes {

namespace {

// The z loop hands out this many consecutive z values per grab.
constexpr std::uint64_t kZChunk = 8;

// Widest target each arithmetic tier handles: u64 with the vector kernels
// below 2^53, u128 while x^3 + y^3 <= 2 * target stays under 2^128, BigInt
// beyond that.
constexpr unsigned kWideTierBits = 126;

std::uint64_t floor_cbrt(std::uint64_t v) { return icbrt(v); }
u128 floor_cbrt(u128 v) { return icbrt(v); }
BigInt floor_cbrt(const BigInt& v) { return icbrt(Natural{v}).value(); }

Natural to_natural(std::uint64_t v) { return Natural{v}; }
Natural to_natural(u128 v) { return Natural{v}; }
Natural to_natural(const BigInt& v) { return Natural{v}; }

template <class T>
class PairScanner {
 public:
  explicit PairScanner(simd::PairScanFn kernel) : kernel_(kernel) {}

  std::uint64_t operator()(const T& residual, const T& y_start, std::vector<std::pair<T, T>>& out) {
    if constexpr (std::is_same_v<T, std::uint64_t>) {
      buffer_.clear();
      const std::uint64_t steps = kernel_(residual, y_start, buffer_);
      for (const auto& hit : buffer_) out.emplace_back(hit.x, hit.y);
      return steps;
    } else {
      return detail::scan_pairs_generic(residual, y_start, out);
    }
  }

 private:
  simd::PairScanFn kernel_;
  std::vector<simd::PairHit> buffer_;
};

unsigned resolve_threads(unsigned requested, std::uint64_t work_items) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t chunks = (work_items + kZChunk - 1) / kZChunk;
  return static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(n, chunks)));
}

template <class T>
void two_cube_impl(const T& target, simd::PairScanFn kernel, SearchReport& report) {
  const T y_start = floor_cbrt(target);
  PairScanner<T> scan(kernel);
  std::vector<std::pair<T, T>> pairs;
  report.pairs_examined = scan(target, y_start, pairs);
  report.z_low = Natural{};
  report.z_high = to_natural(y_start);
  for (const auto& [x, y] : pairs) report.representations.push_back({{to_natural(x), to_natural(y)}});
}

template <class T>
void three_cube_impl(const T& target, const SearchOptions& options, simd::PairScanFn kernel,
                     SearchReport& report) {
  const T z_high = floor_cbrt(target);
  const T z_low = floor_cbrt(T((target + 2) / 3));
  const std::uint64_t total = to_natural(T(z_high - z_low)).to_u64() + 1;
  report.z_low = to_natural(z_low);
  report.z_high = to_natural(z_high);

  struct Local {
    std::vector<std::array<T, 3>> hits;
    std::uint64_t steps = 0;
  };

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> done{0};
  std::atomic<std::uint64_t> found{0};
  std::mutex progress_mutex;
  const bool report_progress = options.progress && options.progress_interval != 0;

  auto work = [&](Local& local) {
    PairScanner<T> scan(kernel);
    std::vector<std::pair<T, T>> pairs;
    for (;;) {
      const std::uint64_t begin = next.fetch_add(kZChunk);
      if (begin >= total) break;
      const std::uint64_t end = std::min(total, begin + kZChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        const T z = z_high - T(i);
        const T residual = target - z * z * z;
        T y_start = floor_cbrt(residual);
        if (z < y_start) y_start = z;

        pairs.clear();
        local.steps += scan(residual, y_start, pairs);
        for (const auto& [x, y] : pairs) local.hits.push_back({x, y, z});
        found.fetch_add(pairs.size());

        const std::uint64_t finished = done.fetch_add(1) + 1;
        if (report_progress && finished % options.progress_interval == 0 && finished != total) {
          std::lock_guard lock(progress_mutex);
          options.progress({finished, total, found.load()});
        }
      }
    }
  };

  const unsigned n_threads = resolve_threads(options.threads, total);
  std::vector<Local> locals(n_threads);
  if (n_threads == 1) {
    work(locals.front());
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(n_threads);
    for (auto& local : locals) workers.emplace_back([&work, &local] { work(local); });
  }

  for (const Local& local : locals) {
    report.pairs_examined += local.steps;
    for (const auto& [x, y, z] : local.hits) {
      report.representations.push_back({{to_natural(x), to_natural(y), to_natural(z)}});
    }
  }
  if (options.progress) options.progress({total, total, found.load()});
}

simd::Backend resolve_backend(const SearchOptions& options) {
  return options.backend.value_or(simd::best_backend());
}

template <class Fn>
SearchReport timed_search(const Natural& target, unsigned k, const SearchOptions& options, Fn&& body) {
  const Natural limit = k == 2 ? two_cube_search_limit() : three_cube_search_limit();
  if (!options.force && target >= limit) throw BoundExceeded(target, k, limit);

  SearchReport report;
  report.target = target;
  report.k = k;
  report.backend = resolve_backend(options);
  const simd::PairScanFn kernel = simd::pair_scan_kernel(report.backend);

  const auto start = std::chrono::steady_clock::now();
  if (target < Natural{simd::kExactResidualLimit}) {
    body(target.to_u64(), kernel, report);
  } else if (target.bit_length() <= kWideTierBits) {
    body(target.to_u128(), kernel, report);
  } else {
    body(target.value(), kernel, report);
  }
  std::sort(report.representations.begin(), report.representations.end());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

std::string bound_message(const Natural& target, unsigned k, const Natural& limit,
                          std::optional<std::uint32_t> p) {
  std::string msg = std::to_string(k) + "-cube search target " + target.to_string();
  if (p) msg += " (p = " + std::to_string(*p) + ")";
  msg += " is not below the limit " + limit.to_string() + "; pass force to search anyway";
  return msg;
}

}  // namespace

Natural two_cube_search_limit() { return pow2(80); }
Natural three_cube_search_limit() { return pow2(45); }

BoundExceeded::BoundExceeded(Natural target, unsigned k, Natural limit, std::optional<std::uint32_t> p)
    : std::out_of_range(bound_message(target, k, limit, p)),
      target_(std::move(target)),
      k_(k),
      limit_(std::move(limit)),
      p_(p) {}

SearchReport search_two_cubes(const Natural& target, const SearchOptions& options) {
  return timed_search(target, 2, options, [&](const auto& t, simd::PairScanFn kernel, SearchReport& report) {
    two_cube_impl(t, kernel, report);
    if (options.progress) options.progress({1, 1, report.representations.size()});
  });
}

SearchReport search_three_cubes(const Natural& target, const SearchOptions& options) {
  return timed_search(target, 3, options, [&](const auto& t, simd::PairScanFn kernel, SearchReport& report) {
    three_cube_impl(t, options, kernel, report);
  });
}

std::vector<ScanEntry> conjecture_scan(std::span<const MersenneExponent> exponents,
                                       const SearchOptions& options) {
  std::vector<EvenPerfect> targets;
  targets.reserve(exponents.size());
  const Natural limit = three_cube_search_limit();
  for (const MersenneExponent& e : exponents) {
    if (e.p() == 2) throw std::invalid_argument("conjecture_scan: p = 2 (N = 6) is excluded");
    EvenPerfect perfect = even_perfect(e);
    if (!options.force && perfect.value >= limit) throw BoundExceeded(perfect.value, 3, limit, e.p());
    targets.push_back(std::move(perfect));
  }

  std::vector<ScanEntry> out;
  out.reserve(targets.size());
  for (const EvenPerfect& perfect : targets) {
    ScanEntry entry;
    entry.p = perfect.exponent.p();
    entry.value = perfect.value;
    entry.report = search_three_cubes(perfect.value, options);
    entry.representable = !entry.report.representations.empty();
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace perfcubes
