#pragma once

// Exact integer arithmetic shared by every other module: the Natural value
// type, integer cube roots, perfect-cube tests and exponentiation.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace perfcubes {

/// Signed arbitrary-precision integer, used where intermediate values may be
/// negative (the b = n^2 - n - 1 term of the two-cube identity at n <= 1).
using BigInt = boost::multiprecision::cpp_int;

__extension__ using u128 = unsigned __int128;

/// Arbitrary-precision nonnegative integer.
///
/// Every operation is exact. Subtraction that would go below zero throws
/// std::domain_error instead of wrapping.
class Natural {
 public:
  Natural() = default;

  template <std::integral T>
    requires(sizeof(T) <= sizeof(std::uint64_t))
  Natural(T v) : value_(v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::signed_integral<T>) {
      if (v < 0) throw std::domain_error("Natural: negative value");
    }
  }

  Natural(u128 v);  // NOLINT(google-explicit-constructor)

  explicit Natural(BigInt v);

  /// Parses a canonical decimal string: digits only, no sign, no leading
  /// zeros except for "0" itself.
  static Natural parse(std::string_view decimal);

  const BigInt& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return value_.is_zero(); }
  std::size_t bit_length() const;

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error
  bool fits_u128() const;
  u128 to_u128() const;  // throws std::overflow_error

  std::string to_string() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator-=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator/=(const Natural& rhs);
  Natural& operator%=(const Natural& rhs);
  Natural& operator<<=(unsigned shift);
  Natural& operator>>=(unsigned shift);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator/(Natural lhs, const Natural& rhs) { return lhs /= rhs; }
  friend Natural operator%(Natural lhs, const Natural& rhs) { return lhs %= rhs; }
  friend Natural operator<<(Natural lhs, unsigned shift) { return lhs <<= shift; }
  friend Natural operator>>(Natural lhs, unsigned shift) { return lhs >>= shift; }

  friend bool operator==(const Natural& a, const Natural& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    const int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  BigInt value_;
};

/// Floor cube root: the r with r^3 <= x < (r+1)^3.
Natural icbrt(const Natural& x);
std::uint64_t icbrt(std::uint64_t x);
std::uint64_t icbrt(u128 x);

/// Returns r when x == r^3 exactly.
std::optional<Natural> is_perfect_cube(const Natural& x);

/// Exact base^exp by square-and-multiply; pow(x, 0) == 1 for every x.
Natural pow(const Natural& base, std::uint64_t exp);

inline Natural cube(const Natural& x) { return x * x * x; }

/// 2^e as a Natural.
Natural pow2(std::uint64_t e);

/// ceil(a / b) for b > 0.
Natural ceil_div(const Natural& a, const Natural& b);

}  // namespace perfcubes
