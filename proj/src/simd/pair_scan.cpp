#include "perfcubes/simd/pair_scan.hpp"

#include <stdexcept>
#include <string>

namespace perfcubes::simd {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::avx512: return "avx512";
    case Backend::neon: return "neon";
  }
  return "?";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (auto b : {Backend::scalar, Backend::avx2, Backend::avx512, Backend::neon}) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

bool is_supported(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
#if defined(PERFCUBES_HAVE_X86_KERNELS)
    case Backend::avx2: return __builtin_cpu_supports("avx2");
    case Backend::avx512: return __builtin_cpu_supports("avx512f");
#endif
#if defined(PERFCUBES_HAVE_NEON_KERNELS)
    case Backend::neon: return true;
#endif
    default: return false;
  }
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out;
  for (auto b : {Backend::scalar, Backend::avx2, Backend::avx512, Backend::neon}) {
    if (is_supported(b)) out.push_back(b);
  }
  return out;
}

Backend best_backend() {
  for (auto b : {Backend::avx512, Backend::avx2, Backend::neon}) {
    if (is_supported(b)) return b;
  }
  return Backend::scalar;
}

PairScanFn pair_scan_kernel(Backend b) {
  if (!is_supported(b)) {
    throw std::invalid_argument("pair-scan backend '" + std::string(to_string(b)) +
                                "' is not available on this machine");
  }
  switch (b) {
    case Backend::scalar: return &detail::pair_scan_scalar;
#if defined(PERFCUBES_HAVE_X86_KERNELS)
    case Backend::avx2: return &detail::pair_scan_avx2;
    case Backend::avx512: return &detail::pair_scan_avx512;
#endif
#if defined(PERFCUBES_HAVE_NEON_KERNELS)
    case Backend::neon: return &detail::pair_scan_neon;
#endif
    default: break;
  }
  throw std::logic_error("unreachable backend");
}

detail::RoundCbrtFn round_cbrt_kernel(Backend b) {
  if (!is_supported(b)) {
    throw std::invalid_argument("backend '" + std::string(to_string(b)) + "' is not available on this machine");
  }
  switch (b) {
#if defined(PERFCUBES_HAVE_X86_KERNELS)
    case Backend::avx2: return &detail::round_cbrt_avx2;
    case Backend::avx512: return &detail::round_cbrt_avx512;
#endif
#if defined(PERFCUBES_HAVE_NEON_KERNELS)
    case Backend::neon: return &detail::round_cbrt_neon;
#endif
    default: break;
  }
  throw std::invalid_argument("backend '" + std::string(to_string(b)) + "' has no vector root extraction");
}

}  // namespace perfcubes::simd
