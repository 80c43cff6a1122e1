#pragma once

// Inner kernel of the cube searches: every pair x <= y with
// x^3 + y^3 == residual, found by a monotone two-pointer scan.
//
// The scalar kernel is the reference. Vector kernels split the scan: while
// x is still well below y, each y is tested on its own by taking a rounded
// cube root of residual - y^3 in a double lane and cubing it back; the last
// few y, where the pointers meet, go through the scalar loop. Integers below
// 2^53 are exact in a double, which bounds the residuals kernels accept.
// Every kernel must return the same hits and the same step count as the
// scalar one.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace perfcubes::simd {

enum class Backend { scalar, avx2, avx512, neon };

/// Residuals accepted by every kernel.
inline constexpr std::uint64_t kExactResidualLimit = std::uint64_t{1} << 53;

struct PairHit {
  std::uint64_t x;
  std::uint64_t y;
  friend bool operator==(const PairHit&, const PairHit&) = default;
};

/// Appends every (x, y) with x <= y <= y_start and x^3 + y^3 == residual to
/// `hits`, in ascending x. Returns the number of (x, y) pairs the two-pointer
/// scan evaluated.
///
/// Requires residual < kExactResidualLimit and y_start^3 <= residual.
using PairScanFn = std::uint64_t (*)(std::uint64_t residual, std::uint64_t y_start,
                                     std::vector<PairHit>& hits);

std::string_view to_string(Backend b);
std::optional<Backend> parse_backend(std::string_view name);

/// Compiled in and supported by the running CPU.
bool is_supported(Backend b);
std::vector<Backend> supported_backends();
/// Widest supported backend.
Backend best_backend();

/// Throws std::invalid_argument if `b` is not supported here.
PairScanFn pair_scan_kernel(Backend b);

namespace detail {
/// out[i] = cbrt(in[i]) rounded to the nearest integer, for integral
/// 0 <= in[i] < 2^53; exact whenever in[i] is a perfect cube. These are the
/// vector kernels' root extraction, exposed for exhaustive testing.
using RoundCbrtFn = void (*)(const double* in, double* out, std::size_t n);
void round_cbrt_avx2(const double* in, double* out, std::size_t n);
void round_cbrt_avx512(const double* in, double* out, std::size_t n);
void round_cbrt_neon(const double* in, double* out, std::size_t n);

std::uint64_t pair_scan_scalar(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits);
std::uint64_t pair_scan_avx2(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits);
std::uint64_t pair_scan_avx512(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits);
std::uint64_t pair_scan_neon(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits);
}  // namespace detail

/// Root extraction of a vector backend; throws for scalar or unsupported.
detail::RoundCbrtFn round_cbrt_kernel(Backend b);

}  // namespace perfcubes::simd
