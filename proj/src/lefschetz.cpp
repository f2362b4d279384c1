#include "lefkappa/lefschetz.hpp"

#include <algorithm>

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"
#include "lefkappa/invariants.hpp"

namespace lefkappa {

using checked::add;
using checked::mul;
using checked::sub;

KodairaVerdict kappa_lefschetz(std::int64_t g, std::int64_t h, std::int64_t n) {
  if (g < 0 || h < 0 || n < 0)
    throw Error(ErrorCode::InvalidArgument, "(g,h,n) must be nonnegative");
  if (h == 0)
    throw Error(ErrorCode::BaseIsSphere,
                "base genus 0 is not covered by the fibration table; use the pencil classifier");

  KodairaVerdict v;
  v.provenance = Provenance::proven();
  if (g == 0) {
    v.dim = KodairaDim::minus_infinity();
    v.notes.push_back("sphere fiber");
  } else if (g == 1) {
    if (h == 1 && n == 0) {
      v.dim = KodairaDim::zero();
      v.notes.push_back("torus bundle over torus");
    } else {
      v.dim = KodairaDim::one();
      v.notes.push_back(h >= 2 ? "torus fiber, base genus >= 2"
                               : "torus fiber over torus with singular fibers");
    }
  } else if (h == 1 && n == 0) {
    v.dim = KodairaDim::one();
    v.notes.push_back("surface bundle over torus");
  } else {
    v.dim = KodairaDim::two();
    if (h >= 2) {
      v.notes.push_back("fiber and base genus >= 2");
    } else if (g == 2) {
      v.notes.push_back("genus-2 fibration over torus is hyperelliptic");
    } else {
      v.provenance = Provenance::conjectural();
      v.notes.push_back("exceptional case (g>2,1,n>=1)");
    }
  }
  return v;
}

bool subadditivity_holds(KodairaDim kappa_m, std::int64_t g, std::int64_t h) {
  return ExtendedInt::of(kappa_m) >= surface_kappa(g) + surface_kappa(h);
}

namespace {

void check_descriptor(const EllipticDescriptor& d) {
  if (const auto* tb = std::get_if<TorusBundleOverGenus>(&d)) {
    if (tb->h < 0) throw Error(ErrorCode::InvalidArgument, "negative base genus");
  } else {
    const auto& e = std::get<EnH>(d);
    if (e.n < 1) throw Error(ErrorCode::InvalidArgument, "E(n,h) needs n >= 1");
    if (e.h < 0) throw Error(ErrorCode::InvalidArgument, "negative twist genus");
  }
}

}  // namespace

KodairaDim elliptic_kappa(const EllipticDescriptor& d) {
  check_descriptor(d);
  if (const auto* tb = std::get_if<TorusBundleOverGenus>(&d)) {
    if (tb->h == 0) return KodairaDim::minus_infinity();
    if (tb->h == 1) return KodairaDim::zero();
    return KodairaDim::one();
  }
  const auto& e = std::get<EnH>(d);
  if (e.h >= 1) return KodairaDim::one();
  if (e.n == 1) return KodairaDim::minus_infinity();
  if (e.n == 2) return KodairaDim::zero();
  return KodairaDim::one();
}

std::pair<std::int64_t, std::int64_t> elliptic_chi_sigma(const EllipticDescriptor& d) {
  check_descriptor(d);
  if (std::holds_alternative<TorusBundleOverGenus>(d)) return {0, 0};
  const auto& e = std::get<EnH>(d);
  return {mul(12, e.n), mul(-8, e.n)};
}

KodairaDim torus_bundle_kappa(std::int64_t g) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "torus bundle classifier needs g >= 2");
  return KodairaDim::one();
}

std::vector<KodairaDim> enriques_class_kappa(int class_id) {
  using K = KodairaDim;
  switch (class_id) {
    case 1: return {K::minus_infinity(), K::zero(), K::one(), K::two()};
    case 2: return {K::zero()};
    case 3: return {K::zero()};
    case 4: return {K::zero(), K::one()};
    case 5: return {K::two()};
    case 6: return {K::zero(), K::one()};
    case 7: return {K::minus_infinity()};
    default:
      throw Error(ErrorCode::OutOfRange,
                  "surface class " + std::to_string(class_id) + " outside 1..7");
  }
}

bool ObstructionReport::contradictory() const {
  for (std::size_t i = 1; i < fired.size(); ++i)
    if (fired[i].conclusion != fired[0].conclusion) return true;
  return false;
}

ObstructionReport conjecture_obstructions(const FibrationData& d) {
  d.validate();
  if (d.h != 1)
    throw Error(ErrorCode::WrongBase,
                "obstructions use chi = n, which holds only over a torus base");
  if (d.g < 2) throw Error(ErrorCode::InvalidArgument, "obstructions need g >= 2");
  const std::int64_t n = d.singular_count();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "obstructions need n >= 1");

  ObstructionReport r;
  if (n % 3 != 0) r.fired.push_back({"mod3", KodairaDim::two()});
  if (d.spin && n % 24 != 0) r.fired.push_back({"spin-rokhlin", KodairaDim::two()});
  if (d.complex && n % 12 != 0) r.fired.push_back({"complex-12", KodairaDim::two()});
  if (d.hyperelliptic) r.fired.push_back({"hyperelliptic", prop_he_verdict(d).dim});
  r.undetermined = r.fired.empty();
  return r;
}

KodairaDim fiber_sum_kappa_bound(KodairaDim k1, KodairaDim k2, KodairaDim k_fiber) {
  return std::max({k1, k2, k_fiber});
}

Rational xiao_slack(std::int64_t g, std::int64_t h, std::int64_t k_squared,
                    const Rational& chi_h) {
  if (g < 2) throw Error(ErrorCode::InvalidArgument, "slope inequality needs g >= 2");
  if (h < 0) throw Error(ErrorCode::InvalidArgument, "negative base genus");
  const std::int64_t gm1_hm1 = mul(g - 1, h - 1);
  const Rational slope = Rational(4) - Rational(4, g);
  return Rational(sub(k_squared, mul(8, gm1_hm1))) - slope * (chi_h - Rational(gm1_hm1));
}

Rational signature_lower_bound(std::int64_t g, std::int64_t chi) {
  if (g < 0) throw Error(ErrorCode::InvalidArgument, "negative genus");
  return Rational(-(g + 1), add(mul(2, g), 1)) * Rational(chi);
}

}  // namespace lefkappa
