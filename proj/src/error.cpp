#include "lefkappa/error.hpp"

namespace lefkappa {

std::string to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonInteger: return "NonInteger";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ImpossibleMinimalData: return "ImpossibleMinimalData";
    case ErrorCode::ContradictoryCanonical: return "ContradictoryCanonical";
    case ErrorCode::NonAlmostComplexBetti: return "NonAlmostComplexBetti";
    case ErrorCode::NonIntegerSignature: return "NonIntegerSignature";
    case ErrorCode::WrongBase: return "WrongBase";
    case ErrorCode::KSquaredNotPositive: return "KSquaredNotPositive";
    case ErrorCode::BaseIsSphere: return "BaseIsSphere";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::InconsistentPairing: return "InconsistentPairing";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

}  // namespace lefkappa
