#include <immintrin.h>

#include <bit>

#include "pair_scan_tail.hpp"

namespace perfcubes::simd::detail {

namespace {

// Same root extraction as the AVX2 kernel, eight lanes wide.
__m512d round_cbrt8(__m512d t) {
  const __m256i bits = _mm256_castps_si256(_mm512_cvtpd_ps(t));
  const __m256 third = _mm256_mul_ps(_mm256_cvtepi32_ps(bits), _mm256_set1_ps(1.0f / 3.0f));
  const __m256i guess = _mm256_add_epi32(_mm256_cvttps_epi32(third), _mm256_set1_epi32(709921077));
  __m512d c = _mm512_cvtps_pd(_mm256_castsi256_ps(guess));
  const __m512d two_t = _mm512_add_pd(t, t);
  for (int i = 0; i < 2; ++i) {
    const __m512d c3 = _mm512_mul_pd(_mm512_mul_pd(c, c), c);
    c = _mm512_div_pd(_mm512_mul_pd(c, _mm512_add_pd(c3, two_t)), _mm512_add_pd(_mm512_add_pd(c3, c3), t));
  }
  return _mm512_roundscale_pd(c, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
}

}  // namespace

void round_cbrt_avx512(const double* in, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; i += 8) {
    const auto m = static_cast<__mmask8>(n - i >= 8 ? 0xFF : (1u << (n - i)) - 1);
    _mm512_mask_storeu_pd(out + i, m, round_cbrt8(_mm512_maskz_loadu_pd(m, in + i)));
  }
}

std::uint64_t pair_scan_avx512(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits) {
  const std::uint64_t y_floor = independent_floor(residual);
  if (y_floor >= y_start) return two_pointer_from(residual, 0, y_start, hits);

  const __m512d r = _mm512_set1_pd(static_cast<double>(residual));
  const __m512d lane = _mm512_set_pd(7.0, 6.0, 5.0, 4.0, 3.0, 2.0, 1.0, 0.0);
  std::uint64_t found = 0;
  std::uint64_t y = y_start;
  while (y > y_floor) {
    const std::uint64_t count = y - y_floor < 8 ? y - y_floor : 8;
    const __m512d yv = _mm512_sub_pd(_mm512_set1_pd(static_cast<double>(y)), lane);
    const __m512d t = _mm512_sub_pd(r, _mm512_mul_pd(_mm512_mul_pd(yv, yv), yv));
    const __m512d c = round_cbrt8(t);
    const auto active = static_cast<__mmask8>((1u << count) - 1);
    unsigned mask = _mm512_mask_cmp_pd_mask(active, _mm512_mul_pd(_mm512_mul_pd(c, c), c), t, _CMP_EQ_OQ);
    if (mask != 0) {
      alignas(64) double roots[8];
      _mm512_store_pd(roots, c);
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
