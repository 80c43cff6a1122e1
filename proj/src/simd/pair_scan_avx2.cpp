#include <immintrin.h>

#include <bit>

#include "pair_scan_tail.hpp"

namespace perfcubes::simd::detail {

namespace {

// Rounded cube root of four integral doubles in [0, 2^53). The float bit
// trick (exponent / 3 plus a bias) lands within a few percent; two Halley
// steps then bring the relative error far below 2^-19, which keeps rounding
// exact on perfect cubes.
__m256d round_cbrt4(__m256d t) {
  const __m128i bits = _mm_castps_si128(_mm256_cvtpd_ps(t));
  const __m128 third = _mm_mul_ps(_mm_cvtepi32_ps(bits), _mm_set1_ps(1.0f / 3.0f));
  const __m128i guess = _mm_add_epi32(_mm_cvttps_epi32(third), _mm_set1_epi32(709921077));
  __m256d c = _mm256_cvtps_pd(_mm_castsi128_ps(guess));
  const __m256d two_t = _mm256_add_pd(t, t);
  for (int i = 0; i < 2; ++i) {
    const __m256d c3 = _mm256_mul_pd(_mm256_mul_pd(c, c), c);
    c = _mm256_div_pd(_mm256_mul_pd(c, _mm256_add_pd(c3, two_t)), _mm256_add_pd(_mm256_add_pd(c3, c3), t));
  }
  return _mm256_round_pd(c, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
}

}  // namespace

void round_cbrt_avx2(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, round_cbrt4(_mm256_loadu_pd(in + i)));
  if (i < n) {
    alignas(32) double buf[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t j = i; j < n; ++j) buf[j - i] = in[j];
    _mm256_store_pd(buf, round_cbrt4(_mm256_load_pd(buf)));
    for (std::size_t j = i; j < n; ++j) out[j] = buf[j - i];
  }
}

std::uint64_t pair_scan_avx2(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits) {
  const std::uint64_t y_floor = independent_floor(residual);
  if (y_floor >= y_start) return two_pointer_from(residual, 0, y_start, hits);

  const __m256d r = _mm256_set1_pd(static_cast<double>(residual));
  const __m256d lane = _mm256_set_pd(3.0, 2.0, 1.0, 0.0);
  std::uint64_t found = 0;
  std::uint64_t y = y_start;
  while (y > y_floor) {
    const std::uint64_t count = y - y_floor < 4 ? y - y_floor : 4;
    const __m256d yv = _mm256_sub_pd(_mm256_set1_pd(static_cast<double>(y)), lane);
    const __m256d t = _mm256_sub_pd(r, _mm256_mul_pd(_mm256_mul_pd(yv, yv), yv));
    const __m256d c = round_cbrt4(t);
    const __m256d eq = _mm256_cmp_pd(_mm256_mul_pd(_mm256_mul_pd(c, c), c), t, _CMP_EQ_OQ);
    auto mask = static_cast<unsigned>(_mm256_movemask_pd(eq)) & ((1u << count) - 1);
    if (mask != 0) {
      alignas(32) double roots[4];
      _mm256_store_pd(roots, c);
      for (; mask != 0; mask &= mask - 1) {
        const int i = std::countr_zero(mask);
        hits.push_back({static_cast<std::uint64_t>(roots[i]), y - static_cast<std::uint64_t>(i)});
        ++found;
      }
    }
    y -= count;
  }
  return finish_scan(residual, y_start, y_floor, found, hits);
}

}  // namespace perfcubes::simd::detail
