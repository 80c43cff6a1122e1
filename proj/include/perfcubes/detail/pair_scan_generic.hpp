#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace perfcubes::detail {

// Reference two-pointer over any exact integer type wide enough to hold
// 2 * residual. Same contract and step count as simd::detail::pair_scan_scalar.
template <class T>
std::uint64_t scan_pairs_generic(const T& residual, T y, std::vector<std::pair<T, T>>& hits) {
  T x = 0;
  std::uint64_t steps = 0;
  while (x <= y) {
    ++steps;
    const T sum = x * x * x + y * y * y;
    if (sum < residual) {
      ++x;
      continue;
    }
    if (sum == residual) {
      hits.emplace_back(x, y);
      ++x;
    }
    if (y == 0) break;
    --y;
  }
  return steps;
}

}  // namespace perfcubes::detail
