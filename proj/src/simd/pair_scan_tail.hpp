#pragma once

// Shared by the vector kernels.
//
// In the scalar two-pointer scan, x only comes within one step of y once
// 2y^3 is close to the residual. Above `independent_floor`, every y is
// therefore visited and its partner, if any, is x = cbrt(residual - y^3) < y - 1,
// so those y can be tested in parallel lanes. The remaining y run through the
// ordinary two-pointer loop, started from the state the scalar scan would
// have on arriving there.

#include <cstdint>
#include <vector>

#include "perfcubes/arith.hpp"
#include "perfcubes/simd/pair_scan.hpp"

namespace perfcubes::simd::detail {

inline std::uint64_t two_pointer_from(std::uint64_t residual, std::uint64_t x, std::uint64_t y,
                                      std::vector<PairHit>& hits) {
  std::uint64_t steps = 0;
  while (x <= y) {
    ++steps;
    const std::uint64_t sum = x * x * x + y * y * y;
    if (sum < residual) {
      ++x;
      continue;
    }
    if (sum == residual) {
      hits.push_back({x, y});
      ++x;
    }
    if (y == 0) break;
    --y;
  }
  return steps;
}

/// Every y strictly above this value can be tested independently.
inline std::uint64_t independent_floor(std::uint64_t residual) {
  // Smallest y with 2y^3 >= residual, plus a margin of two.
  const std::uint64_t meet = residual == 0 ? 0 : icbrt((residual - 1) / 2) + 1;
  return meet + 2;
}

/// Completes a scan whose y values in (y_floor, y_start] were tested
/// independently and produced `prefix_hits` hits. Returns the total step
/// count of the equivalent scalar scan.
inline std::uint64_t finish_scan(std::uint64_t residual, std::uint64_t y_start, std::uint64_t y_floor,
                                 std::uint64_t prefix_hits, std::vector<PairHit>& hits) {
  // Leaving y_floor + 1, the scalar scan holds x = icbrt(residual - (y_floor + 1)^3) + 1
  // whether or not that y matched.
  const std::uint64_t y_last = y_floor + 1;
  const std::uint64_t x = icbrt(residual - y_last * y_last * y_last) + 1;
  // Each prefix hit moved both pointers in one step.
  const std::uint64_t prefix_steps = x + (y_start - y_floor) - prefix_hits;
  return prefix_steps + two_pointer_from(residual, x, y_floor, hits);
}

}  // namespace perfcubes::simd::detail
