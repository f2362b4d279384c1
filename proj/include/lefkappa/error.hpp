#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "lefkappa/rational.hpp"

namespace lefkappa {

enum class ErrorCode {
  Overflow,
  NonInteger,
  InvalidArgument,
  ImpossibleMinimalData,
  ContradictoryCanonical,
  NonAlmostComplexBetti,
  NonIntegerSignature,
  WrongBase,
  KSquaredNotPositive,
  BaseIsSphere,
  OutOfRange,
  ParityViolation,
  NegativeGenus,
  NegativeCount,
  InconsistentPairing,
  DivisibilityViolation,
  ResourceLimit,
};

std::string to_string(ErrorCode code);

// Every failing operation throws this. `value` carries the exact offending
// quantity when there is one (a fractional signature, a negative count).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<Rational> value = std::nullopt)
      : std::runtime_error(to_string(code) + ": " + what),
        code_(code),
        value_(value) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<Rational>& value() const noexcept { return value_; }

 private:
  ErrorCode code_;
  std::optional<Rational> value_;
};

}  // namespace lefkappa
