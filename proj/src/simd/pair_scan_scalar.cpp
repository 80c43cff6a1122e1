#include "perfcubes/simd/pair_scan.hpp"

namespace perfcubes::simd::detail {

std::uint64_t pair_scan_scalar(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits) {
  std::uint64_t x = 0;
  std::uint64_t y = y_start;
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

}  // namespace perfcubes::simd::detail
