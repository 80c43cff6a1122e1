#include <gtest/gtest.h>

#include <random>

#include "perfcubes/arith.hpp"
#include "perfcubes/detail/pair_scan_generic.hpp"
#include "perfcubes/simd/pair_scan.hpp"

namespace perfcubes::simd {
namespace {

struct ScanResult {
  std::vector<PairHit> hits;
  std::uint64_t steps = 0;
};

ScanResult run(Backend b, std::uint64_t residual, std::uint64_t y_start) {
  ScanResult r;
  r.steps = pair_scan_kernel(b)(residual, y_start, r.hits);
  return r;
}

std::vector<PairHit> double_loop(std::uint64_t residual, std::uint64_t y_cap) {
  std::vector<PairHit> out;
  for (std::uint64_t x = 0; x <= y_cap; ++x) {
    for (std::uint64_t y = x; y <= y_cap; ++y) {
      if (x * x * x + y * y * y == residual) out.push_back({x, y});
    }
  }
  return out;
}

// Residuals spread over every magnitude the kernels accept, plus the known
// multi-way sums of two cubes.
std::vector<std::uint64_t> sample_residuals() {
  std::vector<std::uint64_t> out{0,     1,     2,     9,     28,    1729,  4104,     13832,
                                 20683, 32832, 39312, 40033, 46683, 64232, 65728,    87539319,
                                 6963472309248, kExactResidualLimit - 1};
  std::mt19937_64 rng(31337);
  for (int bits = 1; bits <= 53; ++bits) {
    for (int i = 0; i < 6; ++i) out.push_back(rng() >> (64 - bits));
  }
  // Sums of two random cubes guarantee hits away from the small end.
  for (int i = 0; i < 60; ++i) {
    const std::uint64_t a = rng() % 150'000;
    const std::uint64_t b = rng() % 150'000;
    out.push_back(a * a * a + b * b * b);
  }
  return out;
}

class PairScanBackend : public ::testing::TestWithParam<Backend> {};

TEST_P(PairScanBackend, MatchesScalarReference) {
  const Backend b = GetParam();
  std::mt19937_64 rng(4242);
  for (std::uint64_t residual : sample_residuals()) {
    ASSERT_LT(residual, kExactResidualLimit);
    const std::uint64_t full = icbrt(residual);
    for (std::uint64_t y_start : {full, full / 2, full - (full > 0), rng() % (full + 1), std::uint64_t{0}}) {
      const ScanResult expect = run(Backend::scalar, residual, y_start);
      const ScanResult got = run(b, residual, y_start);
      ASSERT_EQ(got.hits, expect.hits) << to_string(b) << " r=" << residual << " y=" << y_start;
      ASSERT_EQ(got.steps, expect.steps) << to_string(b) << " r=" << residual << " y=" << y_start;
    }
  }
}

TEST_P(PairScanBackend, KnownTaxicabNumbers) {
  const Backend b = GetParam();
  EXPECT_EQ(run(b, 1729, 12).hits, (std::vector<PairHit>{{1, 12}, {9, 10}}));
  EXPECT_EQ(run(b, 87539319, icbrt(std::uint64_t{87539319})).hits,
            (std::vector<PairHit>{{167, 436}, {228, 423}, {255, 414}}));
  EXPECT_EQ(run(b, 6963472309248, icbrt(std::uint64_t{6963472309248})).hits,
            (std::vector<PairHit>{{2421, 19083}, {5436, 18948}, {10200, 18072}, {13322, 16630}}));
  EXPECT_TRUE(run(b, 496, 7).hits.empty());
  EXPECT_EQ(run(b, 0, 0).hits, (std::vector<PairHit>{{0, 0}}));
}

TEST_P(PairScanBackend, MatchesScalarOnEverySmallResidual) {
  // Covers every position of the independent/two-pointer boundary.
  const Backend b = GetParam();
  for (std::uint64_t residual = 0; residual < 30'000; ++residual) {
    const std::uint64_t full = icbrt(residual);
    for (std::uint64_t y_start = full; y_start + 3 >= full && y_start <= full; --y_start) {
      const ScanResult expect = run(Backend::scalar, residual, y_start);
      const ScanResult got = run(b, residual, y_start);
      ASSERT_EQ(got.hits, expect.hits) << to_string(b) << " r=" << residual << " y=" << y_start;
      ASSERT_EQ(got.steps, expect.steps) << to_string(b) << " r=" << residual << " y=" << y_start;
      if (y_start == 0) break;
    }
  }
}

class RootExtraction : public ::testing::TestWithParam<Backend> {};
GTEST_ALLOW_UNINSTANTIATED_PARAMETERIZED_TEST(RootExtraction);

TEST_P(RootExtraction, ExactOnEveryCubeBelowLimit) {
  const Backend b = GetParam();
  const auto round_cbrt = round_cbrt_kernel(b);
  std::vector<double> in;
  std::vector<double> want;
  for (std::uint64_t c = 0; c * c * c < kExactResidualLimit; ++c) {
    const std::uint64_t c3 = c * c * c;
    in.push_back(static_cast<double>(c3));
    want.push_back(static_cast<double>(c));
    // Neighbours must not round onto a cube they are not.
    if (c3 > 1) {
      in.push_back(static_cast<double>(c3 - 1));
      want.push_back(-1.0);
    }
    if (c > 0 && c3 + 1 < kExactResidualLimit) {
      in.push_back(static_cast<double>(c3 + 1));
      want.push_back(-1.0);
    }
  }
  std::vector<double> out(in.size());
  round_cbrt(in.data(), out.data(), in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (want[i] >= 0.0) {
      ASSERT_EQ(out[i], want[i]) << "cube " << in[i];
    } else {
      ASSERT_NE(out[i] * out[i] * out[i], in[i]) << "non-cube " << in[i];
    }
  }
}

std::vector<Backend> params() { return supported_backends(); }

std::vector<Backend> vector_params() {
  auto out = supported_backends();
  std::erase(out, Backend::scalar);
  return out;
}

INSTANTIATE_TEST_SUITE_P(Supported, PairScanBackend, ::testing::ValuesIn(params()),
                         [](const auto& info) { return std::string(to_string(info.param)); });
INSTANTIATE_TEST_SUITE_P(Vector, RootExtraction, ::testing::ValuesIn(vector_params()),
                         [](const auto& info) { return std::string(to_string(info.param)); });

TEST(PairScanScalar, MatchesDoubleLoopBelowOneMillion) {
  std::mt19937_64 rng(5);
  std::vector<std::uint64_t> residuals;
  for (std::uint64_t r = 0; r < 20'000; ++r) residuals.push_back(r);
  for (int i = 0; i < 2'000; ++i) residuals.push_back(rng() % 1'000'000);
  for (std::uint64_t r : residuals) {
    const std::uint64_t y = icbrt(r);
    std::vector<PairHit> hits;
    detail::pair_scan_scalar(r, y, hits);
    ASSERT_EQ(hits, double_loop(r, y)) << r;
  }
}

TEST(PairScanGeneric, AgreesWithScalarKernelOnWideTypes) {
  for (std::uint64_t residual : sample_residuals()) {
    const std::uint64_t y = icbrt(residual);
    const ScanResult expect = run(Backend::scalar, residual, y);

    std::vector<std::pair<u128, u128>> wide;
    EXPECT_EQ(perfcubes::detail::scan_pairs_generic<u128>(residual, y, wide), expect.steps);
    ASSERT_EQ(wide.size(), expect.hits.size());

    std::vector<std::pair<BigInt, BigInt>> big;
    EXPECT_EQ(perfcubes::detail::scan_pairs_generic<BigInt>(BigInt(residual), BigInt(y), big), expect.steps);
    ASSERT_EQ(big.size(), expect.hits.size());
    for (std::size_t i = 0; i < big.size(); ++i) {
      EXPECT_EQ(wide[i].first, expect.hits[i].x);
      EXPECT_EQ(big[i].second, expect.hits[i].y);
    }
  }
}

TEST(Backend, RootExtractionRejectsScalar) {
  EXPECT_THROW(round_cbrt_kernel(Backend::scalar), std::invalid_argument);
}

TEST(Backend, NamesAndSupport) {
  for (auto b : {Backend::scalar, Backend::avx2, Backend::avx512, Backend::neon}) {
    EXPECT_EQ(parse_backend(to_string(b)), b);
  }
  EXPECT_FALSE(parse_backend("sse9").has_value());
  EXPECT_TRUE(is_supported(Backend::scalar));
  EXPECT_TRUE(is_supported(best_backend()));
  for (auto b : {Backend::avx2, Backend::avx512, Backend::neon}) {
    if (!is_supported(b)) EXPECT_THROW(pair_scan_kernel(b), std::invalid_argument);
  }
}

}  // namespace
}  // namespace perfcubes::simd
