#include "lefkappa/kodaira.hpp"

#include "lefkappa/checked.hpp"
#include "lefkappa/error.hpp"

namespace lefkappa {

KodairaDim KodairaDim::from_finite(std::int64_t v) {
  switch (v) {
    case 0: return zero();
    case 1: return one();
    case 2: return two();
    default:
      throw Error(ErrorCode::OutOfRange,
                  "Kodaira dimension " + std::to_string(v) + " outside 0..2");
  }
}

std::string KodairaDim::to_string() const {
  switch (value_) {
    case Value::MinusInfinity: return "-inf";
    case Value::Zero: return "0";
    case Value::One: return "1";
    case Value::Two: return "2";
  }
  return "?";
}

std::optional<KodairaDim> KodairaDim::parse(std::string_view s) {
  if (s == "-inf") return minus_infinity();
  if (s == "0") return zero();
  if (s == "1") return one();
  if (s == "2") return two();
  return std::nullopt;
}

ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
  if (!a.finite || !b.finite) return {std::nullopt};
  return {checked::add(*a.finite, *b.finite)};
}

std::string Provenance::to_string() const {
  switch (kind) {
    case Kind::Definitional: return "definitional";
    case Kind::ProvenEquivalent: return "proven";
    case Kind::Conjectural: return "conjectural";
    case Kind::ObstructionForced: return "obstruction:" + obstruction;
  }
  return "?";
}

}  // namespace lefkappa
