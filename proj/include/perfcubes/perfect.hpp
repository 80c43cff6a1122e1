#pragma once

// Even perfect numbers via the Euclid-Euler form N = 2^(p-1) (2^p - 1), and
// the deficient / perfect / abundant classification of small integers.

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "perfcubes/arith.hpp"

namespace perfcubes {

/// Deterministic trial division; exponents here stay tiny.
bool is_prime_u64(std::uint64_t n);

/// Lucas-Lehmer: true iff 2^p - 1 is prime. p = 2 is answered directly.
/// Throws std::invalid_argument when p < 2 or p is composite.
bool lucas_lehmer(std::uint32_t p);

/// Where p falls with respect to the case split of the five-cube
/// construction.
enum class ResidueClass { special_p2, special_p3, one_mod_six, five_mod_six };

std::string_view to_string(ResidueClass c);

/// A prime p with 2^p - 1 prime. Both facts are checked on construction.
class MersenneExponent {
 public:
  /// Throws std::invalid_argument unless p and 2^p - 1 are both prime.
  static MersenneExponent make(std::uint32_t p);

  std::uint32_t p() const noexcept { return p_; }
  ResidueClass residue_class() const noexcept { return residue_; }
  /// The k with p = 6k + 1 or p = 6k + 5; empty for p = 2 and p = 3.
  std::optional<std::uint32_t> k() const noexcept { return k_; }

  friend bool operator==(const MersenneExponent&, const MersenneExponent&) = default;

 private:
  friend std::vector<MersenneExponent> mersenne_exponents_up_to(std::uint32_t bound);
  static MersenneExponent from_verified(std::uint32_t p);

  MersenneExponent(std::uint32_t p, ResidueClass r, std::optional<std::uint32_t> k)
      : p_(p), residue_(r), k_(k) {}

  std::uint32_t p_;
  ResidueClass residue_;
  std::optional<std::uint32_t> k_;
};

/// All Mersenne exponents p <= bound, ascending. Throws when bound < 2.
std::vector<MersenneExponent> mersenne_exponents_up_to(std::uint32_t bound);

struct EvenPerfect {
  MersenneExponent exponent;
  Natural value;
};

EvenPerfect even_perfect(const MersenneExponent& p);

enum class Abundance { deficient, perfect, abundant };

std::string_view to_string(Abundance a);

/// Default trial-division limit; covers every n < 2^64.
inline constexpr std::uint64_t kDefaultDivisorScanLimit = std::uint64_t{1} << 32;

/// Sum of proper divisors of n, from its trial-division factorization.
/// Trial divisors never exceed `scan_limit`; if a cofactor whose primality
/// would need a larger divisor remains, std::out_of_range is thrown.
/// Requires 1 <= n < 2^64.
Natural aliquot_sum(const Natural& n, std::uint64_t scan_limit = kDefaultDivisorScanLimit);

/// Nicomachus' classification of n by its aliquot sum. Same preconditions
/// and errors as aliquot_sum.
Abundance classify(const Natural& n, std::uint64_t scan_limit = kDefaultDivisorScanLimit);

}  // namespace perfcubes
