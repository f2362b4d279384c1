#pragma once

#include <cstdint>

#include "lefkappa/kodaira.hpp"
#include "lefkappa/rational.hpp"

namespace lefkappa {

/// Numerical invariants of a closed oriented 4-manifold.
///
/// Only chi and sigma are stored; K^2 = 2 chi + 3 sigma and
/// chi_h = (chi + sigma) / 4 are always recomputed from them.
class ManifoldInvariants {
 public:
  ManifoldInvariants(std::int64_t chi, std::int64_t sigma);

  std::int64_t chi() const noexcept { return chi_; }
  std::int64_t sigma() const noexcept { return sigma_; }
  std::int64_t k_squared() const;
  Rational chi_h() const;
  /// True iff chi + sigma is divisible by 4, i.e. chi_h is an integer.
  bool almost_complex_admissible() const;

  friend bool operator==(const ManifoldInvariants&, const ManifoldInvariants&) = default;

 private:
  std::int64_t chi_;
  std::int64_t sigma_;
};

/// Kodaira dimension of a closed orientable surface of the given genus.
KodairaDim surface_kappa(std::int64_t genus);

/// Euler characteristic of a (g,h) Lefschetz fibration with n singular
/// points: (2-2g)(2-2h) + n.
std::int64_t euler_characteristic(std::int64_t g, std::int64_t h, std::int64_t n);

/// Never rejects; inadmissible (chi + sigma) mod 4 is reported through
/// almost_complex_admissible().
ManifoldInvariants compute_invariants(std::int64_t chi, std::int64_t sigma);

/// Symplectic Kodaira dimension of a minimal manifold from its canonical
/// class data: rational/ruled -> -inf, torsion -> 0, K^2 = 0 -> 1, K^2 > 0 -> 2.
///
/// Throws InvalidArgument when `minimal` is false, ContradictoryCanonical for
/// a torsion class with nonzero square and ImpossibleMinimalData for a
/// non-rational, non-torsion class with negative square.
KodairaDim kodaira_from_canonical(bool minimal, bool rational_or_ruled,
                                  bool k_torsion, std::int64_t k_squared);

/// P_n = n(n-1)/2 K^2 + (1 - b1 + b+)/2 for a general-type surface, n >= 2.
std::int64_t plurigenus_general_type(std::int64_t n, std::int64_t k_squared,
                                     std::int64_t b1, std::int64_t b_plus);

}  // namespace lefkappa
