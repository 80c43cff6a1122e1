#include "perfcubes/arith.hpp"

#include <algorithm>
#include <ostream>

namespace perfcubes {

namespace {

// Digit-by-digit cube root over three-bit groups. Comparing (x >> s) instead
// of shifting the trial value up keeps every intermediate inside T.
template <class T, int Bits>
T icbrt_digits(T x) {
  T y = 0;
  for (int s = ((Bits - 1) / 3) * 3; s >= 0; s -= 3) {
    y += y;
    const T b = 3 * y * (y + 1) + 1;
    if ((x >> s) >= b) {
      x -= b << s;
      ++y;
    }
  }
  return y;
}

void require_nonnegative(const BigInt& v) {
  if (v.sign() < 0) throw std::domain_error("Natural: negative value");
}

}  // namespace

Natural::Natural(u128 v) {
  value_ = static_cast<std::uint64_t>(v >> 64);
  value_ <<= 64;
  value_ |= static_cast<std::uint64_t>(v);
}

Natural::Natural(BigInt v) : value_(std::move(v)) { require_nonnegative(value_); }

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("empty decimal string");
  if (!std::all_of(decimal.begin(), decimal.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("not a decimal natural: '" + std::string(decimal) + "'");
  }
  if (decimal.size() > 1 && decimal.front() == '0') {
    throw std::invalid_argument("leading zero in '" + std::string(decimal) + "'");
  }
  Natural out;
  for (char c : decimal) {
    out.value_ *= 10;
    out.value_ += static_cast<unsigned>(c - '0');
  }
  return out;
}

std::size_t Natural::bit_length() const {
  if (value_.is_zero()) return 0;
  return boost::multiprecision::msb(value_) + 1;
}

bool Natural::fits_u64() const { return bit_length() <= 64; }

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("Natural does not fit in 64 bits");
  return static_cast<std::uint64_t>(value_);
}

bool Natural::fits_u128() const { return bit_length() <= 128; }

u128 Natural::to_u128() const {
  if (!fits_u128()) throw std::overflow_error("Natural does not fit in 128 bits");
  const auto lo = static_cast<std::uint64_t>(value_ & std::numeric_limits<std::uint64_t>::max());
  const auto hi = static_cast<std::uint64_t>(value_ >> 64);
  return (static_cast<u128>(hi) << 64) | lo;
}

std::string Natural::to_string() const { return value_.str(); }

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (value_ < rhs.value_) throw std::domain_error("Natural subtraction underflow");
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator/=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural division by zero");
  value_ /= rhs.value_;
  return *this;
}

Natural& Natural::operator%=(const Natural& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Natural division by zero");
  value_ %= rhs.value_;
  return *this;
}

Natural& Natural::operator<<=(unsigned shift) {
  value_ <<= shift;
  return *this;
}

Natural& Natural::operator>>=(unsigned shift) {
  value_ >>= shift;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_string(); }

std::uint64_t icbrt(std::uint64_t x) { return icbrt_digits<std::uint64_t, 64>(x); }

std::uint64_t icbrt(u128 x) { return static_cast<std::uint64_t>(icbrt_digits<u128, 128>(x)); }

Natural icbrt(const Natural& x) {
  if (x.fits_u128()) return Natural(icbrt(x.to_u128()));

  // Newton from above: start at a power of two no smaller than the root, then
  // r <- (2r + x / r^2) / 3 decreases monotonically until it reaches the floor.
  const BigInt& v = x.value();
  BigInt r = BigInt(1) << ((x.bit_length() + 2) / 3);
  for (;;) {
    BigInt next = (2 * r + v / (r * r)) / 3;
    if (next >= r) break;
    r = std::move(next);
  }
  return Natural(std::move(r));
}

std::optional<Natural> is_perfect_cube(const Natural& x) {
  Natural r = icbrt(x);
  if (cube(r) == x) return r;
  return std::nullopt;
}

Natural pow(const Natural& base, std::uint64_t exp) {
  Natural result{1u};
  Natural square = base;
  while (exp != 0) {
    if (exp & 1u) result *= square;
    exp >>= 1;
    if (exp != 0) square *= square;
  }
  return result;
}

Natural pow2(std::uint64_t e) { return Natural{1u} << static_cast<unsigned>(e); }

Natural ceil_div(const Natural& a, const Natural& b) {
  Natural q = a / b;
  if (!(a % b).is_zero()) q += Natural{1u};
  return q;
}

}  // namespace perfcubes
