#include "perfcubes/construct.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perfcubes {

namespace {

BigInt cube_signed(const BigInt& v) { return v * v * v; }

Natural to_natural(const BigInt& v) {
  if (v.sign() < 0) throw std::logic_error("negative cube base in decomposition");
  return Natural{v};
}

}  // namespace

IdentityPair identity_pair(const Natural& n) {
  const BigInt& v = n.value();
  IdentityPair pair{n, v * v + v - 1, v * v - v - 1};
  if (!identity_holds(pair)) throw std::logic_error("identity_pair: a^3 + b^3 != 2n^6 - 2");
  return pair;
}

bool identity_holds(const IdentityPair& pair) {
  const BigInt& v = pair.n.value();
  const BigInt v2 = v * v;
  return cube_signed(pair.a) + cube_signed(pair.b) == 2 * v2 * v2 * v2 - 2;
}

std::string_view to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::heath: return "heath";
    case DecompositionKind::constructive_case_p3: return "constructive_case_p3";
    case DecompositionKind::constructive_case1: return "constructive_case1";
    case DecompositionKind::constructive_case2: return "constructive_case2";
    case DecompositionKind::searched: return "searched";
  }
  return "?";
}

DecompositionKind parse_decomposition_kind(std::string_view name) {
  for (auto kind : {DecompositionKind::heath, DecompositionKind::constructive_case_p3,
                    DecompositionKind::constructive_case1, DecompositionKind::constructive_case2,
                    DecompositionKind::searched}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown decomposition kind '" + std::string(name) + "'");
}

CubeDecomposition CubeDecomposition::make(Natural target,
                                          std::array<Natural, kDecompositionWidth> bases,
                                          DecompositionKind kind, bool cancelled_pair) {
  CubeDecomposition d;
  std::sort(bases.begin(), bases.end());
  d.target_ = std::move(target);
  d.bases_ = std::move(bases);
  d.kind_ = kind;
  d.cancelled_pair_ = cancelled_pair;
  d.nonzero_count_ = static_cast<std::size_t>(
      std::count_if(d.bases_.begin(), d.bases_.end(), [](const Natural& b) { return !b.is_zero(); }));
  if (!d.verify()) {
    throw std::logic_error("cube decomposition does not sum to " + d.target_.to_string());
  }
  return d;
}

CubeDecomposition CubeDecomposition::from_terms(Natural target, std::span<const Natural> terms,
                                                DecompositionKind kind) {
  if (terms.size() > kDecompositionWidth) {
    throw std::invalid_argument("more than five cube terms");
  }
  std::array<Natural, kDecompositionWidth> bases{};
  std::copy(terms.begin(), terms.end(), bases.begin() + (kDecompositionWidth - terms.size()));
  return make(std::move(target), std::move(bases), kind);
}

bool CubeDecomposition::verify() const {
  Natural sum;
  for (const Natural& b : bases_) sum += cube(b);
  return sum == target_;
}

CubeDecomposition constructive_decompose(const EvenPerfect& perfect) {
  const MersenneExponent& e = perfect.exponent;
  switch (e.residue_class()) {
    case ResidueClass::special_p2:
      throw std::invalid_argument("constructive_decompose: 6 is excluded");

    case ResidueClass::special_p3:
      return CubeDecomposition::make(perfect.value, {Natural{}, Natural{}, Natural{}, Natural{1u}, Natural{3u}},
                                     DecompositionKind::constructive_case_p3);

    case ResidueClass::one_mod_six: {
      const std::uint32_t k = *e.k();
      const IdentityPair pair = identity_pair(pow2(k));
      const BigInt scale = BigInt(1) << (2 * k);
      return CubeDecomposition::make(
          perfect.value,
          {to_natural(scale * pair.a), to_natural(scale * pair.b), to_natural(scale), Natural{}, Natural{}},
          DecompositionKind::constructive_case1);
    }

    case ResidueClass::five_mod_six: {
      const std::uint32_t k = *e.k();
      const IdentityPair pair = identity_pair(pow2(k));
      const BigInt outer = BigInt(1) << (4 * k + 1);
      const BigInt inner = BigInt(1) << (2 * k + 1);
      const BigInt ta = inner * pair.a;
      const BigInt tb = inner * pair.b;

      std::array<Natural, kDecompositionWidth> bases{to_natural(3 * outer), to_natural(3 * outer),
                                                     to_natural(2 * outer), Natural{}, Natural{}};
      bool cancelled = false;
      if (tb.sign() < 0) {
        // Only at k = 0, where a = 1 and b = -1: the two terms are exact
        // negatives of each other and drop out of the sum.
        if (ta != -tb) throw std::logic_error("negative base without a cancelling partner");
        cancelled = true;
      } else {
        bases[3] = to_natural(ta);
        bases[4] = to_natural(tb);
      }
      return CubeDecomposition::make(perfect.value, std::move(bases),
                                     DecompositionKind::constructive_case2, cancelled);
    }
  }
  throw std::logic_error("unreachable residue class");
}

}  // namespace perfcubes
