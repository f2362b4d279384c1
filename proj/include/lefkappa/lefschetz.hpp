#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "lefkappa/hyperelliptic.hpp"
#include "lefkappa/kodaira.hpp"
#include "lefkappa/rational.hpp"

namespace lefkappa {

/// Kodaira dimension of a relatively minimal (g,h,n) Lefschetz fibration
/// over a base of positive genus, read off the combinatorial table.
///
/// The value is always the table entry. Provenance records whether that
/// entry is known to agree with the complex/symplectic dimension: it is
/// Conjectural exactly for (g>2, h=1, n>=1) and ProvenEquivalent elsewhere.
/// Throws BaseIsSphere for h=0; pencils handle that case.
KodairaVerdict kappa_lefschetz(std::int64_t g, std::int64_t h, std::int64_t n);

/// kappa_M >= kappa(Sigma_g) + kappa(Sigma_h) under extended addition.
bool subadditivity_holds(KodairaDim kappa_m, std::int64_t g, std::int64_t h);

struct TorusBundleOverGenus {
  std::int64_t h = 0;
  friend bool operator==(const TorusBundleOverGenus&, const TorusBundleOverGenus&) = default;
};

/// E(n,h) = E(n) fiber-summed with Sigma_h x T^2; E(n,0) = E(n).
struct EnH {
  std::int64_t n = 1;
  std::int64_t h = 0;
  friend bool operator==(const EnH&, const EnH&) = default;
};

using EllipticDescriptor = std::variant<TorusBundleOverGenus, EnH>;

KodairaDim elliptic_kappa(const EllipticDescriptor& d);

/// Euler characteristic and signature of the descriptor's total space:
/// torus bundles have (0, 0), E(n,h) has (12n, -8n).
std::pair<std::int64_t, std::int64_t> elliptic_chi_sigma(const EllipticDescriptor& d);

/// (g,1) or (1,g) surface bundle with g >= 2: sigma = 0 forces K^2 = 0, and
/// subadditivity rules out 0, so the dimension is 1.
KodairaDim torus_bundle_kappa(std::int64_t g);

/// Possible Kodaira dimensions of the seven classes of minimal compact
/// complex surfaces, ascending. Throws OutOfRange outside 1..7.
std::vector<KodairaDim> enriques_class_kappa(int class_id);

struct FiredObstruction {
  std::string name;
  KodairaDim conclusion;
  friend bool operator==(const FiredObstruction&, const FiredObstruction&) = default;
};

struct ObstructionReport {
  std::vector<FiredObstruction> fired;
  bool undetermined = true;

  /// True when two fired conclusions disagree.
  bool contradictory() const;
};

/// Independent arguments that force dimension 2 on a (g,1,n) fibration,
/// g >= 2, n >= 1, using chi = n:
///   mod3           n not divisible by 3
///   spin-rokhlin   spin and 24 does not divide n
///   complex-12     complex and 12 does not divide n
///   hyperelliptic  hyperelliptic (positivity of K^2; errors propagate)
/// Throws WrongBase for h != 1.
ObstructionReport conjecture_obstructions(const FibrationData& d);

/// max of the three; a lower bound for the fiber sum, not its value.
KodairaDim fiber_sum_kappa_bound(KodairaDim k1, KodairaDim k2, KodairaDim k_fiber);

/// Slope inequality slack for a holomorphic (g,h) fibration, g >= 2:
///   K^2 - 8(g-1)(h-1) - (4 - 4/g)(chi_h - (h-1)(g-1)).
/// The inequality holds iff the slack is nonnegative.
Rational xiao_slack(std::int64_t g, std::int64_t h, std::int64_t k_squared,
                    const Rational& chi_h);

/// -(g+1)/(2g+1) chi, the signature lower bound the slope inequality gives
/// over a torus base.
Rational signature_lower_bound(std::int64_t g, std::int64_t chi);

}  // namespace lefkappa
