#include "lefkappa/pencil.hpp"

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"

namespace lefkappa {

using checked::add;
using checked::mul;
using checked::sub;

std::string to_string(ConventionMode mode) {
  return mode == ConventionMode::PaperLiteral ? "paper-literal" : "euler";
}

std::optional<ConventionMode> parse_convention_mode(std::string_view s) {
  if (s == "euler") return ConventionMode::EulerConsistent;
  if (s == "paper-literal") return ConventionMode::PaperLiteral;
  return std::nullopt;
}

PencilData PencilData::from_genus(std::int64_t k, std::int64_t A, std::int64_t B,
                                  std::int64_t chi, std::int64_t sigma) {
  return {k, A, B, chi, sigma, canonical_dot_h(k, A)};
}

namespace {

void require_base_points(std::int64_t A) {
  if (A < 1)
    throw Error(ErrorCode::InvalidArgument,
                "a pencil has at least one base point, got A=" + std::to_string(A));
}

}  // namespace

std::int64_t pencil_genus(std::int64_t A, std::int64_t k_dot_h) {
  require_base_points(A);
  const std::int64_t twice = add(add(A, k_dot_h), 2);
  if (twice % 2 != 0)
    throw Error(ErrorCode::ParityViolation,
                "A + K.h = " + std::to_string(twice - 2) + " is odd");
  const std::int64_t k = twice / 2;
  if (k < 0)
    throw Error(ErrorCode::NegativeGenus, "fiber genus " + std::to_string(k) + " < 0",
                Rational(k));
  return k;
}

std::int64_t canonical_dot_h(std::int64_t k, std::int64_t A) {
  return sub(sub(mul(2, k), 2), A);
}

ModeValue<std::int64_t> singular_fiber_count(std::int64_t chi, std::int64_t A,
                                             std::int64_t k_dot_h, ConventionMode mode) {
  require_base_points(A);
  const std::int64_t a_coeff = mode == ConventionMode::PaperLiteral ? 1 : 3;
  const std::int64_t b = add(add(chi, mul(a_coeff, A)), mul(2, k_dot_h));
  if (b < 0)
    throw Error(ErrorCode::NegativeCount,
                "singular count B = " + std::to_string(b) + " under " + to_string(mode) +
                    " convention",
                Rational(b));
  return {b, mode};
}

bool pencil_consistency(const PencilData& p) {
  try {
    if (p.B < 0) return false;
    const std::int64_t k = pencil_genus(p.A, p.k_dot_h);
    if (k != p.k) return false;
    return add(p.chi, p.A) == add(mul(2, sub(2, mul(2, k))), p.B);
  } catch (const Error&) {
    return false;
  }
}

KodairaDim kappa_pencil(std::int64_t k, std::int64_t A, std::int64_t chi, std::int64_t sigma) {
  const std::int64_t u = canonical_dot_h(k, A);
  const std::int64_t v = add(mul(3, sigma), mul(2, chi));
  if (u < 0 || v < 0) return KodairaDim::minus_infinity();
  if (u == 0 && v == 0) return KodairaDim::zero();
  if (u == 0)
    throw Error(ErrorCode::InconsistentPairing,
                "K.h = 0 with K^2 = " + std::to_string(v) + " > 0 cannot occur");
  return v == 0 ? KodairaDim::one() : KodairaDim::two();
}

ModeValue<std::int64_t> fibration_to_pencil_genus(std::int64_t g, std::int64_t h,
                                                  std::int64_t b_prime, std::int64_t A,
                                                  std::int64_t B, ConventionMode mode) {
  require_base_points(A);
  if (g < 0 || h < 0 || b_prime < 0 || B < 0)
    throw Error(ErrorCode::InvalidArgument, "genera and counts must be nonnegative");

  std::int64_t numerator = 0;
  std::int64_t offset = 0;
  if (mode == ConventionMode::PaperLiteral) {
    numerator = sub(add(A, B), b_prime);
    offset = sub(add(g, h), mul(g, h));
  } else {
    const std::int64_t chi_base_fiber = mul(sub(2, mul(2, g)), sub(2, mul(2, h)));
    numerator = add(sub(sub(sub(B, A), chi_base_fiber), b_prime), 4);
  }
  if (numerator % 4 != 0)
    throw Error(ErrorCode::DivisibilityViolation,
                "numerator " + std::to_string(numerator) + " is not divisible by 4",
                Rational(numerator, 4));
  const std::int64_t k = add(numerator / 4, offset);
  if (k < 0)
    throw Error(ErrorCode::NegativeGenus, "fiber genus " + std::to_string(k) + " < 0",
                Rational(k));
  return {k, mode};
}

std::vector<std::string> kappa0_pencil_constraints(std::int64_t k, std::int64_t A,
                                                   std::int64_t B, std::int64_t chi) {
  std::vector<std::string> violations;
  if (A % 2 != 0) violations.emplace_back("A odd");
  if (B % 2 != 0) violations.emplace_back("B odd");
  if (k < 2) violations.emplace_back("k < 2");
  if (chi != 0 && chi != 12 && chi != 24) violations.emplace_back("chi not in {0,12,24}");
  return violations;
}

}  // namespace lefkappa
