#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lefkappa/kodaira.hpp"

namespace lefkappa {

/// Which reading of the singular-point count to use.
///
/// PaperLiteral evaluates B = chi + A + 2 K.h exactly as it is usually
/// quoted. EulerConsistent uses B = chi + 3A + 2 K.h, the only value
/// compatible with counting Euler characteristic on the blow-up at the A
/// base points. The two disagree on every pencil (they differ by 2A).
enum class ConventionMode { PaperLiteral, EulerConsistent };

std::string to_string(ConventionMode mode);  // "paper-literal" / "euler"
std::optional<ConventionMode> parse_convention_mode(std::string_view s);

template <typename T>
struct ModeValue {
  T value;
  ConventionMode mode;
  friend bool operator==(const ModeValue&, const ModeValue&) = default;
};

/// Topological Lefschetz pencil summary: fiber genus k, A = h.h base points,
/// B singular points, plus chi and sigma of the total space and the pairing
/// K.h of the pencil's canonical class with the hyperplane class.
struct PencilData {
  std::int64_t k = 0;
  std::int64_t A = 1;
  std::int64_t B = 0;
  std::int64_t chi = 0;
  std::int64_t sigma = 0;
  std::int64_t k_dot_h = 0;

  /// Builds a datum with K.h = 2k - 2 - A.
  static PencilData from_genus(std::int64_t k, std::int64_t A, std::int64_t B,
                               std::int64_t chi, std::int64_t sigma);

  friend bool operator==(const PencilData&, const PencilData&) = default;
};

/// k = (A + K.h + 2) / 2. Throws ParityViolation when A + K.h is odd and
/// NegativeGenus when the result is negative.
std::int64_t pencil_genus(std::int64_t A, std::int64_t k_dot_h);

/// K.h = 2k - 2 - A; inverse of pencil_genus in its second argument.
std::int64_t canonical_dot_h(std::int64_t k, std::int64_t A);

/// Singular-point count under the chosen convention. Throws NegativeCount
/// (carrying the value) when the count comes out negative.
ModeValue<std::int64_t> singular_fiber_count(std::int64_t chi, std::int64_t A,
                                             std::int64_t k_dot_h, ConventionMode mode);

/// Euler-count oracle on the blow-up: chi + A = 2(2 - 2k) + B, where k is
/// the Fact-1 genus of (A, K.h) and must match p.k. Never throws.
bool pencil_consistency(const PencilData& p);

/// Combinatorial Kodaira dimension from u = 2k-2-A and v = 3 sigma + 2 chi.
/// Throws InconsistentPairing for u = 0, v > 0.
KodairaDim kappa_pencil(std::int64_t k, std::int64_t A, std::int64_t chi, std::int64_t sigma);

/// Fiber genus of a pencil on the total space of a (g,h) fibration with
/// B' singular fibers. Throws DivisibilityViolation when the numerator is
/// not divisible by 4 and NegativeGenus for a negative result.
ModeValue<std::int64_t> fibration_to_pencil_genus(std::int64_t g, std::int64_t h,
                                                  std::int64_t b_prime, std::int64_t A,
                                                  std::int64_t B, ConventionMode mode);

/// Necessary conditions on a pencil of a minimal Kodaira-dimension-0
/// manifold. Returns the violated ones by name ("A odd", "B odd", "k < 2",
/// "chi not in {0,12,24}"); empty when all hold.
std::vector<std::string> kappa0_pencil_constraints(std::int64_t k, std::int64_t A,
                                                   std::int64_t B, std::int64_t chi);

}  // namespace lefkappa
