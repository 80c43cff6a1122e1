#pragma once

// Exhaustive searches for representations of a target as a sum of two or
// three cubes of naturals (0 included).

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "perfcubes/arith.hpp"
#include "perfcubes/perfect.hpp"
#include "perfcubes/simd/pair_scan.hpp"

namespace perfcubes {

/// Default exclusive upper bounds on search targets. Larger targets need
/// SearchOptions::force.
Natural two_cube_search_limit();    // 2^80
Natural three_cube_search_limit();  // 2^45

/// Bases of one representation, ascending.
struct Representation {
  std::vector<Natural> bases;

  friend bool operator==(const Representation&, const Representation&) = default;
  friend auto operator<=>(const Representation& a, const Representation& b) {
    return std::lexicographical_compare_three_way(a.bases.begin(), a.bases.end(), b.bases.begin(),
                                                  b.bases.end());
  }
};

struct ProgressUpdate {
  std::uint64_t z_done = 0;
  std::uint64_t z_total = 0;
  std::uint64_t found_so_far = 0;
};

using ProgressCallback = std::function<void(const ProgressUpdate&)>;

struct SearchOptions {
  /// Worker threads for the z loop; 0 means one per hardware thread.
  unsigned threads = 1;
  /// Lift the default target bounds.
  bool force = false;
  /// Pair-scan kernel; defaults to the widest the CPU supports.
  std::optional<simd::Backend> backend;
  /// Called after every `progress_interval` completed z values and once at
  /// the end. Calls are serialized even when the scan is parallel.
  ProgressCallback progress;
  std::uint64_t progress_interval = 0;
};

struct SearchReport {
  Natural target;
  unsigned k = 0;
  /// Lexicographically sorted; complete within [z_low, z_high].
  std::vector<Representation> representations;
  /// Range of the largest base that was scanned.
  Natural z_low;
  Natural z_high;
  std::uint64_t pairs_examined = 0;
  std::chrono::nanoseconds elapsed{0};
  simd::Backend backend = simd::Backend::scalar;
};

/// Thrown when a target is at or above the search limit and force is off.
class BoundExceeded : public std::out_of_range {
 public:
  BoundExceeded(Natural target, unsigned k, Natural limit, std::optional<std::uint32_t> p = std::nullopt);

  const Natural& target() const noexcept { return target_; }
  unsigned k() const noexcept { return k_; }
  const Natural& limit() const noexcept { return limit_; }
  std::optional<std::uint32_t> exponent() const noexcept { return p_; }

 private:
  Natural target_;
  unsigned k_;
  Natural limit_;
  std::optional<std::uint32_t> p_;
};

/// All 0 <= x <= y with x^3 + y^3 == target.
SearchReport search_two_cubes(const Natural& target, const SearchOptions& options = {});

/// All 0 <= x <= y <= z with x^3 + y^3 + z^3 == target. z runs downward from
/// icbrt(target) to icbrt(ceil(target / 3)); each z is a two-cube scan of
/// target - z^3 with y capped at z.
SearchReport search_three_cubes(const Natural& target, const SearchOptions& options = {});

struct ScanEntry {
  std::uint32_t p = 0;
  Natural value;
  SearchReport report;
  /// False marks a counterexample candidate to the three-cube conjecture.
  bool representable = false;
};

/// Three-cube search over the even perfect numbers of the given exponents.
/// Throws std::invalid_argument for p = 2 and BoundExceeded (carrying p) when
/// a value is out of bounds; both are checked before any search starts.
std::vector<ScanEntry> conjecture_scan(std::span<const MersenneExponent> exponents,
                                       const SearchOptions& options = {});

}  // namespace perfcubes
