#include <arm_neon.h>

#include "pair_scan_tail.hpp"

namespace perfcubes::simd::detail {

namespace {

// Same root extraction as the x86 kernels, two lanes wide.
float64x2_t round_cbrt2(float64x2_t t) {
  const int32x2_t bits = vreinterpret_s32_f32(vcvt_f32_f64(t));
  const float32x2_t third = vmul_n_f32(vcvt_f32_s32(bits), 1.0f / 3.0f);
  const int32x2_t guess = vadd_s32(vcvt_s32_f32(third), vdup_n_s32(709921077));
  float64x2_t c = vcvt_f64_f32(vreinterpret_f32_s32(guess));
  const float64x2_t two_t = vaddq_f64(t, t);
  for (int i = 0; i < 2; ++i) {
    const float64x2_t c3 = vmulq_f64(vmulq_f64(c, c), c);
    c = vdivq_f64(vmulq_f64(c, vaddq_f64(c3, two_t)), vaddq_f64(vaddq_f64(c3, c3), t));
  }
  return vrndnq_f64(c);
}

}  // namespace

void round_cbrt_neon(const double* in, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, round_cbrt2(vld1q_f64(in + i)));
  if (i < n) out[i] = vgetq_lane_f64(round_cbrt2(vdupq_n_f64(in[i])), 0);
}

std::uint64_t pair_scan_neon(std::uint64_t residual, std::uint64_t y_start, std::vector<PairHit>& hits) {
  const std::uint64_t y_floor = independent_floor(residual);
  if (y_floor >= y_start) return two_pointer_from(residual, 0, y_start, hits);

  const float64x2_t r = vdupq_n_f64(static_cast<double>(residual));
  const float64x2_t lane = {0.0, 1.0};
  std::uint64_t found = 0;
  std::uint64_t y = y_start;
  while (y > y_floor) {
    const std::uint64_t count = y - y_floor < 2 ? 1 : 2;
    const float64x2_t yv = vsubq_f64(vdupq_n_f64(static_cast<double>(y)), lane);
    const float64x2_t t = vsubq_f64(r, vmulq_f64(vmulq_f64(yv, yv), yv));
    const float64x2_t c = round_cbrt2(t);
    const uint64x2_t eq = vceqq_f64(vmulq_f64(vmulq_f64(c, c), c), t);
    if (vgetq_lane_u64(eq, 0) != 0) {
      hits.push_back({static_cast<std::uint64_t>(vgetq_lane_f64(c, 0)), y});
      ++found;
    }
    if (count == 2 && vgetq_lane_u64(eq, 1) != 0) {
      hits.push_back({static_cast<std::uint64_t>(vgetq_lane_f64(c, 1)), y - 1});
      ++found;
    }
    y -= count;
  }
  return finish_scan(residual, y_start, y_floor, found, hits);
}

}  // namespace perfcubes::simd::detail
