#pragma once

#include <cstdint>
#include <vector>

#include "lefkappa/kodaira.hpp"
#include "lefkappa/rational.hpp"

namespace lefkappa {

/// Combinatorial summary of a (g,h) Lefschetz fibration.
///
/// `separating[j-1]` counts separating vanishing cycles that split off a
/// genus-j piece, j = 1..floor(g/2). The boolean flags are assertions made by
/// whoever supplied the data; nothing here verifies them.
struct FibrationData {
  std::int64_t g = 0;
  std::int64_t h = 0;
  std::int64_t nonseparating = 0;
  std::vector<std::int64_t> separating;
  bool hyperelliptic = false;
  bool spin = false;
  bool complex = false;
  bool minimal = true;

  /// Builds a datum, right-padding `separating` with zeros to floor(g/2).
  /// Throws InvalidArgument on negative counts or too many entries.
  static FibrationData make(std::int64_t g, std::int64_t h, std::int64_t a,
                            std::vector<std::int64_t> s = {});

  /// Total singular-fiber count a + sum(s).
  std::int64_t singular_count() const;
  /// Throws InvalidArgument unless the invariants of the type hold.
  void validate() const;

  friend bool operator==(const FibrationData&, const FibrationData&) = default;
};

/// Base-genus policy for the signature formula. Only the torus base is
/// enabled by default; AnyBase evaluates the same expression for other bases
/// and exists as an opt-in extension point.
enum class EndoBase { TorusOnly, AnyBase };

/// Exact value of the hyperelliptic signature sum
///   -(g+1)/(2g+1) a + sum_j (4j(g-j)/(2g+1) - 1) s_j
/// without the integrality check.
Rational endo_signature_exact(const FibrationData& d, EndoBase base = EndoBase::TorusOnly);

/// Integer signature. Throws NonIntegerSignature (carrying the exact value)
/// when the sum is fractional and WrongBase when h != 1.
std::int64_t endo_signature(const FibrationData& d, EndoBase base = EndoBase::TorusOnly);

/// K^2 from the expanded per-cycle coefficients
///   (g-1)/(2g+1) a + sum_j (6j(g-2j) + 2g(j-1) + (4gj-1))/(2g+1) s_j.
/// This path never touches the signature; it agrees with 3 sigma + 2 n.
std::int64_t hyperelliptic_k_squared(const FibrationData& d);

/// Separating-cycle coefficient numerator in the two printed forms.
std::int64_t separating_k2_numerator_expanded(std::int64_t g, std::int64_t j);
std::int64_t separating_k2_numerator_collected(std::int64_t g, std::int64_t j);

/// Kodaira dimension 2 for a hyperelliptic (g,1) fibration with n > 0, forced
/// by positivity of K^2. Throws KSquaredNotPositive if that ever fails.
KodairaVerdict prop_he_verdict(const FibrationData& d);

}  // namespace lefkappa
