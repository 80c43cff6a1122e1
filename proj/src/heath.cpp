#include "perfcubes/heath.hpp"

#include <stdexcept>

namespace perfcubes {

HeathDecomposition heath_decompose(const EvenPerfect& perfect, std::uint64_t materialize_limit) {
  const std::uint32_t p = perfect.exponent.p();
  if (p == 2) throw std::invalid_argument("heath_decompose: 6 is not a sum of consecutive odd cubes");

  HeathDecomposition d;
  d.p = p;
  d.target = perfect.value;
  d.n = pow2((p - 1) / 2);
  d.materialized = d.n <= Natural{materialize_limit};
  if (d.materialized) {
    const std::uint64_t count = d.n.to_u64();
    d.bases.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) d.bases.emplace_back(2 * i + 1);
  }
  if (!verify_closed_form(d)) {
    throw std::logic_error("heath_decompose: closed form does not reproduce N");
  }
  return d;
}

bool verify_by_summation(const HeathDecomposition& d) {
  if (!d.materialized) throw std::logic_error("verify_by_summation: bases not materialized");
  if (Natural{d.bases.size()} != d.n) return false;
  Natural sum;
  for (const Natural& b : d.bases) sum += cube(b);
  return sum == d.target;
}

bool verify_closed_form(const HeathDecomposition& d) { return odd_cube_closed_form(d.n) == d.target; }

Natural odd_cube_sum(const Natural& n) {
  // 2n^4 < 2^125 for n < 2^31, so the running sum fits in 128 bits.
  if (n < Natural{std::uint64_t{1} << 31}) {
    const std::uint64_t count = n.to_u64();
    u128 sum = 0;
    for (std::uint64_t i = 1; i <= count; ++i) {
      const u128 odd = 2 * i - 1;
      sum += odd * odd * odd;
    }
    return Natural{sum};
  }
  Natural sum;
  for (Natural i{1u}; i <= n; i += Natural{1u}) {
    sum += cube(Natural{2u} * i - Natural{1u});
  }
  return sum;
}

Natural odd_cube_closed_form(const Natural& n) {
  const Natural n2 = n * n;
  if (n2.is_zero()) return Natural{};
  return n2 * (Natural{2u} * n2 - Natural{1u});
}

bool odd_cube_identity_check(const Natural& n) {
  if (n.is_zero()) throw std::invalid_argument("odd_cube_identity_check: n must be >= 1");
  return odd_cube_sum(n) == odd_cube_closed_form(n);
}

}  // namespace perfcubes
