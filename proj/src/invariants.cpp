#include "lefkappa/invariants.hpp"

#include <string>

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"

namespace lefkappa {

using checked::add;
using checked::mul;
using checked::sub;

ManifoldInvariants::ManifoldInvariants(std::int64_t chi, std::int64_t sigma)
    : chi_(chi), sigma_(sigma) {}

std::int64_t ManifoldInvariants::k_squared() const {
  return add(mul(2, chi_), mul(3, sigma_));
}

Rational ManifoldInvariants::chi_h() const { return Rational(add(chi_, sigma_), 4); }

bool ManifoldInvariants::almost_complex_admissible() const {
  return chi_h().is_integer();
}

KodairaDim surface_kappa(std::int64_t genus) {
  if (genus < 0)
    throw Error(ErrorCode::InvalidArgument, "negative genus " + std::to_string(genus));
  if (genus == 0) return KodairaDim::minus_infinity();
  if (genus == 1) return KodairaDim::zero();
  return KodairaDim::one();
}

std::int64_t euler_characteristic(std::int64_t g, std::int64_t h, std::int64_t n) {
  if (g < 0 || h < 0 || n < 0)
    throw Error(ErrorCode::InvalidArgument, "genera and singular count must be nonnegative");
  return add(mul(sub(2, mul(2, g)), sub(2, mul(2, h))), n);
}

ManifoldInvariants compute_invariants(std::int64_t chi, std::int64_t sigma) {
  ManifoldInvariants inv(chi, sigma);
  (void)inv.k_squared();  // surface overflow at construction, not first use
  return inv;
}

KodairaDim kodaira_from_canonical(bool minimal, bool rational_or_ruled,
                                  bool k_torsion, std::int64_t k_squared) {
  if (!minimal)
    throw Error(ErrorCode::InvalidArgument,
                "canonical-class classification needs a minimal model");
  if (rational_or_ruled) return KodairaDim::minus_infinity();
  if (k_torsion) {
    if (k_squared != 0)
      throw Error(ErrorCode::ContradictoryCanonical,
                  "torsion canonical class with K^2 = " + std::to_string(k_squared));
    return KodairaDim::zero();
  }
  if (k_squared < 0)
    throw Error(ErrorCode::ImpossibleMinimalData,
                "K^2 < 0 on a minimal manifold that is not rational or ruled");
  return k_squared == 0 ? KodairaDim::one() : KodairaDim::two();
}

std::int64_t plurigenus_general_type(std::int64_t n, std::int64_t k_squared,
                                     std::int64_t b1, std::int64_t b_plus) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "plurigenus formula needs n >= 2");
  if (k_squared <= 0)
    throw Error(ErrorCode::InvalidArgument, "general type needs K^2 > 0");
  const std::int64_t twice_chi_h = add(sub(1, b1), b_plus);
  if (twice_chi_h % 2 != 0)
    throw Error(ErrorCode::NonAlmostComplexBetti,
                "non-almost-complex Betti data: 1 - b1 + b+ = " +
                    std::to_string(twice_chi_h) + " is odd");
  const Rational value =
      Rational(mul(n, n - 1), 2) * Rational(k_squared) + Rational(twice_chi_h, 2);
  return value.to_integer();
}

}  // namespace lefkappa
