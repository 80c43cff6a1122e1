#include <gtest/gtest.h>

#include "perfcubes/construct.hpp"

namespace perfcubes {
namespace {

CubeDecomposition construct_for(std::uint32_t p) {
  return constructive_decompose(even_perfect(MersenneExponent::make(p)));
}

std::array<Natural, 5> five(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d, std::uint64_t e) {
  return {Natural{a}, Natural{b}, Natural{c}, Natural{d}, Natural{e}};
}

TEST(IdentityPair, SmallN) {
  const auto p0 = identity_pair(Natural{0u});
  EXPECT_EQ(p0.a, -1);
  EXPECT_EQ(p0.b, -1);

  const auto p1 = identity_pair(Natural{1u});
  EXPECT_EQ(p1.a, 1);
  EXPECT_EQ(p1.b, -1);

  const auto p2 = identity_pair(Natural{2u});
  EXPECT_EQ(p2.a, 5);
  EXPECT_EQ(p2.b, 1);
  ASSERT_EQ(125 + 1, 2 * 64 - 2);

  const auto p4 = identity_pair(Natural{4u});
  EXPECT_EQ(p4.a, 19);
  EXPECT_EQ(p4.b, 11);
  ASSERT_EQ(6859 + 1331, 2 * 4096 - 2);
}

TEST(IdentityPair, HoldsUpTo100000) {
  for (std::uint64_t n = 0; n <= 100'000; ++n) {
    const auto pair = identity_pair(Natural{n});
    ASSERT_TRUE(identity_holds(pair));
    if (n >= 2) ASSERT_TRUE(pair.a > 0 && pair.b > 0) << n;
  }
}

TEST(IdentityPair, TamperedPairFails) {
  auto pair = identity_pair(Natural{4u});
  pair.b += 1;
  EXPECT_FALSE(identity_holds(pair));
}

TEST(Constructive, BaseCaseP3) {
  const auto d = construct_for(3);
  EXPECT_EQ(d.bases(), five(0, 0, 0, 1, 3));
  EXPECT_EQ(d.kind(), DecompositionKind::constructive_case_p3);
  EXPECT_EQ(d.nonzero_count(), 2u);
}

TEST(Constructive, P5CancelsNegativePair) {
  const auto d = construct_for(5);
  EXPECT_EQ(d.bases(), five(0, 0, 4, 6, 6));
  EXPECT_EQ(d.kind(), DecompositionKind::constructive_case2);
  EXPECT_EQ(d.nonzero_count(), 3u);
  EXPECT_TRUE(d.cancelled_pair());
}

TEST(Constructive, P7) {
  const auto d = construct_for(7);
  EXPECT_EQ(d.bases(), five(0, 0, 4, 4, 20));
  EXPECT_EQ(d.kind(), DecompositionKind::constructive_case1);
  EXPECT_FALSE(d.cancelled_pair());
}

TEST(Constructive, P13) {
  const auto d = construct_for(13);
  EXPECT_EQ(d.bases(), five(0, 0, 16, 176, 304));
  EXPECT_EQ(d.nonzero_count(), 3u);
}

TEST(Constructive, P17) {
  const auto d = construct_for(17);
  EXPECT_EQ(d.bases(), five(352, 608, 1024, 1536, 1536));
  EXPECT_EQ(d.kind(), DecompositionKind::constructive_case2);
  EXPECT_EQ(d.nonzero_count(), 5u);
  EXPECT_FALSE(d.cancelled_pair());
  const std::uint64_t sum = 2 * std::uint64_t{1536} * 1536 * 1536 + std::uint64_t{1024} * 1024 * 1024 +
                            std::uint64_t{608} * 608 * 608 + std::uint64_t{352} * 352 * 352;
  EXPECT_EQ(sum, 8589869056u);
}

TEST(Constructive, SixIsExcluded) {
  EXPECT_THROW(construct_for(2), std::invalid_argument);
}

TEST(Constructive, AllExponentsTo127) {
  for (const auto& e : mersenne_exponents_up_to(127)) {
    if (e.p() == 2) continue;
    const auto d = constructive_decompose(even_perfect(e));
    EXPECT_TRUE(d.verify()) << e.p();
    EXPECT_EQ(d.cancelled_pair(), e.p() == 5) << e.p();
    EXPECT_TRUE(std::is_sorted(d.bases().begin(), d.bases().end()));
    if (e.p() % 6 == 1) {
      EXPECT_EQ(d.kind(), DecompositionKind::constructive_case1);
      EXPECT_EQ(d.nonzero_count(), 3u);
    } else if (e.p() % 6 == 5) {
      EXPECT_EQ(d.kind(), DecompositionKind::constructive_case2);
      EXPECT_EQ(d.nonzero_count(), e.p() == 5 ? 3u : 5u);
    }
  }
}

TEST(CubeDecomposition, MakeSortsAndChecks) {
  const auto d = CubeDecomposition::make(Natural{28u}, five(3, 0, 1, 0, 0), DecompositionKind::searched);
  EXPECT_EQ(d.bases(), five(0, 0, 0, 1, 3));
  EXPECT_THROW(CubeDecomposition::make(Natural{28u}, five(0, 0, 0, 1, 4), DecompositionKind::searched),
               std::logic_error);
}

TEST(CubeDecomposition, FromTermsPads) {
  const std::vector<Natural> terms{Natural{720u}, Natural{1336u}, Natural{1800u}};
  const auto d = CubeDecomposition::from_terms(Natural{8589869056u}, terms, DecompositionKind::searched);
  EXPECT_EQ(d.bases(), five(0, 0, 720, 1336, 1800));
  EXPECT_EQ(d.nonzero_count(), 3u);
}

TEST(DecompositionKind, NamesRoundTrip) {
  for (auto k : {DecompositionKind::heath, DecompositionKind::constructive_case_p3,
                 DecompositionKind::constructive_case1, DecompositionKind::constructive_case2,
                 DecompositionKind::searched}) {
    EXPECT_EQ(parse_decomposition_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_decomposition_kind("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace perfcubes
