#include "lefkappa/hyperelliptic.hpp"

#include <string>

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"

namespace lefkappa {

using checked::add;
using checked::mul;
using checked::sub;

FibrationData FibrationData::make(std::int64_t g, std::int64_t h, std::int64_t a,
                                  std::vector<std::int64_t> s) {
  if (g < 0 || h < 0)
    throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  const auto width = static_cast<std::size_t>(g / 2);
  if (s.size() > width)
    throw Error(ErrorCode::InvalidArgument,
                "s has " + std::to_string(s.size()) + " entries, at most " +
                    std::to_string(width) + " allowed for g=" + std::to_string(g));
  s.resize(width, 0);
  FibrationData d;
  d.g = g;
  d.h = h;
  d.nonseparating = a;
  d.separating = std::move(s);
  d.validate();
  return d;
}

void FibrationData::validate() const {
  if (g < 0 || h < 0)
    throw Error(ErrorCode::InvalidArgument, "genus must be nonnegative");
  if (nonseparating < 0)
    throw Error(ErrorCode::InvalidArgument, "negative nonseparating count");
  if (separating.size() != static_cast<std::size_t>(g / 2))
    throw Error(ErrorCode::InvalidArgument,
                "s must have exactly floor(g/2) = " + std::to_string(g / 2) + " entries");
  for (auto c : separating)
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "negative separating count");
}

std::int64_t FibrationData::singular_count() const {
  std::int64_t n = nonseparating;
  for (auto c : separating) n = add(n, c);
  return n;
}

namespace {

void require_endo_domain(const FibrationData& d, EndoBase base) {
  d.validate();
  if (d.g < 2)
    throw Error(ErrorCode::InvalidArgument, "signature formula needs fiber genus >= 2");
  if (!d.hyperelliptic)
    throw Error(ErrorCode::InvalidArgument,
                "signature formula applies to hyperelliptic fibrations only");
  if (base == EndoBase::TorusOnly && d.h != 1)
    throw Error(ErrorCode::WrongBase,
                "signature formula is stated for base genus 1, got h=" + std::to_string(d.h));
}

}  // namespace

Rational endo_signature_exact(const FibrationData& d, EndoBase base) {
  require_endo_domain(d, base);
  const std::int64_t g = d.g;
  const std::int64_t denom = add(mul(2, g), 1);
  Rational sigma = Rational(-(g + 1), denom) * Rational(d.nonseparating);
  for (std::size_t i = 0; i < d.separating.size(); ++i) {
    const auto j = static_cast<std::int64_t>(i + 1);
    const Rational coeff = Rational(mul(4 * j, g - j), denom) - Rational(1);
    sigma += coeff * Rational(d.separating[i]);
  }
  return sigma;
}

std::int64_t endo_signature(const FibrationData& d, EndoBase base) {
  const Rational sigma = endo_signature_exact(d, base);
  if (!sigma.is_integer())
    throw Error(ErrorCode::NonIntegerSignature,
                "signature sum " + sigma.to_string() + " is not an integer", sigma);
  return sigma.numerator();
}

std::int64_t separating_k2_numerator_expanded(std::int64_t g, std::int64_t j) {
  return add(add(mul(mul(6, j), sub(g, mul(2, j))), mul(mul(2, g), sub(j, 1))),
             sub(mul(mul(4, g), j), 1));
}

std::int64_t separating_k2_numerator_collected(std::int64_t g, std::int64_t j) {
  return sub(sub(sub(mul(mul(12, j), g), mul(mul(12, j), j)), mul(2, g)), 1);
}

std::int64_t hyperelliptic_k_squared(const FibrationData& d) {
  // Admissibility is integrality of the signature, not of K^2: when 3 | 2g+1
  // a fractional signature can still give an integral 3 sigma.
  (void)endo_signature(d);
  const std::int64_t g = d.g;
  const std::int64_t denom = add(mul(2, g), 1);
  Rational k2 = Rational(g - 1, denom) * Rational(d.nonseparating);
  for (std::size_t i = 0; i < d.separating.size(); ++i) {
    const auto j = static_cast<std::int64_t>(i + 1);
    k2 += Rational(separating_k2_numerator_expanded(g, j), denom) *
          Rational(d.separating[i]);
  }
  return k2.to_integer();
}

KodairaVerdict prop_he_verdict(const FibrationData& d) {
  const std::int64_t n = d.singular_count();
  if (n <= 0)
    throw Error(ErrorCode::InvalidArgument,
                "positivity verdict needs at least one singular fiber");
  const std::int64_t sigma = endo_signature(d);
  const std::int64_t k2 = hyperelliptic_k_squared(d);
  if (k2 <= 0)
    throw Error(ErrorCode::KSquaredNotPositive,
                "internal consistency failure: hyperelliptic K^2 = " +
                    std::to_string(k2) + " with n = " + std::to_string(n));
  KodairaVerdict v;
  v.dim = KodairaDim::two();
  v.provenance = Provenance::forced("hyperelliptic-Endo");
  v.notes.push_back("sigma=" + std::to_string(sigma));
  v.notes.push_back("K^2=" + std::to_string(k2) + ">0");
  return v;
}

}  // namespace lefkappa
