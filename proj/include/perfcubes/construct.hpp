#pragma once

// Constructive five-cube decomposition of even perfect numbers other than 6.
//
// With n = 2^k, a = n^2 + n - 1 and b = n^2 - n - 1, the identity
//   2n^6 - 2 = a^3 + b^3
// gives, for p = 6k + 1,
//   N = (2^(2k) a)^3 + (2^(2k) b)^3 + (2^(2k))^3
// and, for p = 6k + 5, using 64 = 3^3 + 3^3 + 2^3 + 2,
//   N = 2 (3 * 2^(4k+1))^3 + (2 * 2^(4k+1))^3 + (2^(2k+1) a)^3 + (2^(2k+1) b)^3.
// p = 3 is the base case 28 = 1^3 + 3^3.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include "perfcubes/arith.hpp"
#include "perfcubes/perfect.hpp"

namespace perfcubes {

/// a = n^2 + n - 1 and b = n^2 - n - 1, with a^3 + b^3 = 2n^6 - 2 checked on
/// construction. b is negative for n <= 1, so both are signed.
struct IdentityPair {
  Natural n;
  BigInt a;
  BigInt b;
};

IdentityPair identity_pair(const Natural& n);

/// 2n^6 - 2 == a^3 + b^3 over signed integers.
bool identity_holds(const IdentityPair& pair);

enum class DecompositionKind {
  heath,
  constructive_case_p3,
  constructive_case1,
  constructive_case2,
  searched,
};

std::string_view to_string(DecompositionKind kind);
/// Throws std::invalid_argument for an unknown name.
DecompositionKind parse_decomposition_kind(std::string_view name);

inline constexpr std::size_t kDecompositionWidth = 5;

/// A target written as the sum of exactly five cubes, zero-padded and
/// sorted ascending.
class CubeDecomposition {
 public:
  /// Sorts `bases`, counts the nonzero entries and checks the cube sum.
  /// Throws std::logic_error if the sum does not reproduce `target`.
  static CubeDecomposition make(Natural target, std::array<Natural, kDecompositionWidth> bases,
                                DecompositionKind kind, bool cancelled_pair = false);

  /// Pads a representation with fewer than five terms with leading zeros.
  static CubeDecomposition from_terms(Natural target, std::span<const Natural> terms,
                                      DecompositionKind kind);

  const Natural& target() const noexcept { return target_; }
  const std::array<Natural, kDecompositionWidth>& bases() const noexcept { return bases_; }
  DecompositionKind kind() const noexcept { return kind_; }
  std::size_t nonzero_count() const noexcept { return nonzero_count_; }
  /// Set when a +c^3 / -c^3 pair was dropped because one base came out
  /// negative (p = 5).
  bool cancelled_pair() const noexcept { return cancelled_pair_; }

  /// Re-sums the cubes of the bases against the target.
  bool verify() const;

 private:
  CubeDecomposition() = default;

  Natural target_;
  std::array<Natural, kDecompositionWidth> bases_{};
  DecompositionKind kind_ = DecompositionKind::searched;
  std::size_t nonzero_count_ = 0;
  bool cancelled_pair_ = false;
};

/// Throws std::invalid_argument for p = 2.
CubeDecomposition constructive_decompose(const EvenPerfect& perfect);

}  // namespace perfcubes
