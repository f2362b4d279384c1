#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lefkappa {

/// Kodaira dimension in the extended range {-inf, 0, 1, 2}.
class KodairaDim {
 public:
  enum class Value : std::int8_t { MinusInfinity = -1, Zero = 0, One = 1, Two = 2 };

  constexpr KodairaDim(Value v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr KodairaDim minus_infinity() { return Value::MinusInfinity; }
  static constexpr KodairaDim zero() { return Value::Zero; }
  static constexpr KodairaDim one() { return Value::One; }
  static constexpr KodairaDim two() { return Value::Two; }

  /// Throws Error(OutOfRange) outside 0..2.
  static KodairaDim from_finite(std::int64_t v);

  constexpr Value value() const { return value_; }
  constexpr bool is_finite() const { return value_ != Value::MinusInfinity; }
  constexpr int finite_value() const { return static_cast<int>(value_); }

  friend constexpr bool operator==(KodairaDim, KodairaDim) = default;
  friend constexpr std::strong_ordering operator<=>(KodairaDim a, KodairaDim b) {
    return static_cast<int>(a.value_) <=> static_cast<int>(b.value_);
  }

  /// "-inf", "0", "1" or "2".
  std::string to_string() const;
  static std::optional<KodairaDim> parse(std::string_view s);

 private:
  Value value_;
};

/// Lower-bound arithmetic for sums of Kodaira dimensions. The result can
/// exceed 2 (e.g. 1 + 1 + 1 in a chain), so it is a plain extended integer.
struct ExtendedInt {
  std::optional<std::int64_t> finite;  // nullopt means -inf

  static ExtendedInt of(KodairaDim k) {
    if (!k.is_finite()) return {std::nullopt};
    return {k.finite_value()};
  }
  friend bool operator==(const ExtendedInt&, const ExtendedInt&) = default;
  friend std::strong_ordering operator<=>(const ExtendedInt& a, const ExtendedInt& b) {
    if (!a.finite && !b.finite) return std::strong_ordering::equal;
    if (!a.finite) return std::strong_ordering::less;
    if (!b.finite) return std::strong_ordering::greater;
    return *a.finite <=> *b.finite;
  }
};

/// -inf absorbs; finite values add as integers.
ExtendedInt operator+(ExtendedInt a, ExtendedInt b);
inline ExtendedInt operator+(KodairaDim a, KodairaDim b) {
  return ExtendedInt::of(a) + ExtendedInt::of(b);
}

/// How a verdict was reached.
struct Provenance {
  enum class Kind { Definitional, ProvenEquivalent, Conjectural, ObstructionForced };

  Kind kind = Kind::Definitional;
  std::string obstruction;  // set only for ObstructionForced

  static Provenance definitional() { return {Kind::Definitional, {}}; }
  static Provenance proven() { return {Kind::ProvenEquivalent, {}}; }
  static Provenance conjectural() { return {Kind::Conjectural, {}}; }
  static Provenance forced(std::string name) {
    return {Kind::ObstructionForced, std::move(name)};
  }

  friend bool operator==(const Provenance&, const Provenance&) = default;

  /// "definitional", "proven", "conjectural" or "obstruction:<name>".
  std::string to_string() const;
};

struct KodairaVerdict {
  KodairaDim dim = KodairaDim::minus_infinity();
  Provenance provenance;
  std::vector<std::string> notes;

  friend bool operator==(const KodairaVerdict&, const KodairaVerdict&) = default;
};

}  // namespace lefkappa
