#pragma once

// Heath's decomposition of an even perfect number N = 2^(p-1) (2^p - 1),
// p odd, as 1^3 + 3^3 + ... + (2n - 1)^3 with n = 2^((p-1)/2), resting on
// the identity 1^3 + 3^3 + ... + (2n - 1)^3 = n^2 (2n^2 - 1).

#include <cstdint>
#include <vector>

#include "perfcubes/arith.hpp"
#include "perfcubes/perfect.hpp"

namespace perfcubes {

/// Bases are stored only up to this many terms; beyond it the
/// decomposition is carried by n alone.
inline constexpr std::uint64_t kHeathMaterializeLimit = std::uint64_t{1} << 20;

struct HeathDecomposition {
  std::uint32_t p = 0;
  Natural target;
  Natural n;
  /// [1, 3, ..., 2n - 1] when `materialized`, otherwise empty.
  std::vector<Natural> bases;
  bool materialized = false;
};

/// Throws std::invalid_argument for p = 2 (N = 6 has no such form). Bases
/// are materialized when n <= materialize_limit.
HeathDecomposition heath_decompose(const EvenPerfect& perfect,
                                   std::uint64_t materialize_limit = kHeathMaterializeLimit);

/// Literal re-summation of the stored bases' cubes against the target.
/// Throws std::logic_error if the bases were not materialized.
bool verify_by_summation(const HeathDecomposition& d);

/// n^2 (2n^2 - 1) == target.
bool verify_closed_form(const HeathDecomposition& d);

/// 1^3 + 3^3 + ... + (2n - 1)^3, summed term by term.
Natural odd_cube_sum(const Natural& n);

/// n^2 (2n^2 - 1).
Natural odd_cube_closed_form(const Natural& n);

/// Literal summation agrees with the closed form. Requires n >= 1.
bool odd_cube_identity_check(const Natural& n);

}  // namespace perfcubes
