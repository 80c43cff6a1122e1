#include "perfcubes/perfect.hpp"

#include <string>

namespace perfcubes {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; static_cast<u128>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool lucas_lehmer(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("lucas_lehmer: p must be at least 2");
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("lucas_lehmer: p = " + std::to_string(p) + " is not prime");
  }
  if (p == 2) return true;

  const BigInt m = (BigInt(1) << p) - 1;
  BigInt s = 4;
  for (std::uint32_t i = 0; i < p - 2; ++i) {
    s = s * s;
    // x mod (2^p - 1) folds the high bits onto the low ones.
    while (s > m) s = (s & m) + (s >> p);
    if (s == m) s = 0;
    s -= 2;
    if (s.sign() < 0) s += m;
  }
  return s.is_zero();
}

std::string_view to_string(ResidueClass c) {
  switch (c) {
    case ResidueClass::special_p2: return "special_p2";
    case ResidueClass::special_p3: return "special_p3";
    case ResidueClass::one_mod_six: return "one_mod_six";
    case ResidueClass::five_mod_six: return "five_mod_six";
  }
  return "?";
}

MersenneExponent MersenneExponent::make(std::uint32_t p) {
  if (p < 2 || !is_prime_u64(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  if (!lucas_lehmer(p)) {
    throw std::invalid_argument("2^" + std::to_string(p) + " - 1 is not prime");
  }
  return from_verified(p);
}

MersenneExponent MersenneExponent::from_verified(std::uint32_t p) {
  if (p == 2) return {p, ResidueClass::special_p2, std::nullopt};
  if (p == 3) return {p, ResidueClass::special_p3, std::nullopt};
  const std::uint32_t r = p % 6;
  const std::uint32_t k = (p - r) / 6;
  return {p, r == 1 ? ResidueClass::one_mod_six : ResidueClass::five_mod_six, k};
}

std::vector<MersenneExponent> mersenne_exponents_up_to(std::uint32_t bound) {
  if (bound < 2) throw std::invalid_argument("mersenne_exponents_up_to: bound must be >= 2");
  std::vector<MersenneExponent> out;
  for (std::uint64_t p = 2; p <= bound; ++p) {
    const auto q = static_cast<std::uint32_t>(p);
    if (is_prime_u64(q) && lucas_lehmer(q)) out.push_back(MersenneExponent::from_verified(q));
  }
  return out;
}

EvenPerfect even_perfect(const MersenneExponent& p) {
  const Natural mersenne = pow2(p.p()) - Natural{1u};
  return {p, pow2(p.p() - 1) * mersenne};
}

std::string_view to_string(Abundance a) {
  switch (a) {
    case Abundance::deficient: return "deficient";
    case Abundance::perfect: return "perfect";
    case Abundance::abundant: return "abundant";
  }
  return "?";
}

Natural aliquot_sum(const Natural& n, std::uint64_t scan_limit) {
  if (n.is_zero() || !n.fits_u64()) {
    throw std::out_of_range("aliquot_sum: n must satisfy 1 <= n < 2^64");
  }
  const std::uint64_t original = n.to_u64();
  std::uint64_t m = original;

  // sigma(n) = prod over p^e || n of (p^(e+1) - 1) / (p - 1).
  Natural sigma{1u};
  auto take = [&](std::uint64_t d) {
    Natural term{1u};
    Natural power{1u};
    while (m % d == 0) {
      m /= d;
      power *= Natural{d};
      term += power;
    }
    sigma *= term;
  };

  if (m % 2 == 0) take(2);
  std::uint64_t d = 3;
  while (static_cast<u128>(d) * d <= m) {
    if (d > scan_limit) {
      throw std::out_of_range("aliquot_sum: divisor scan limit " + std::to_string(scan_limit) +
                              " reached before factoring " + std::to_string(original));
    }
    if (m % d == 0) take(d);
    d += 2;
  }
  if (m > 1) sigma *= Natural{m} + Natural{1u};
  return sigma - n;
}

Abundance classify(const Natural& n, std::uint64_t scan_limit) {
  const Natural s = aliquot_sum(n, scan_limit);
  if (s < n) return Abundance::deficient;
  if (s == n) return Abundance::perfect;
  return Abundance::abundant;
}

}  // namespace perfcubes
