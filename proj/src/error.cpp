#include "dmu/error.hpp"

namespace dmu {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SumNotTwo: return "SumNotTwo";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::LengthTooSmall: return "LengthTooSmall";
    case ErrorCode::UnequalMarkedWeights: return "UnequalMarkedWeights";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::AmbiguousField: return "AmbiguousField";
    case ErrorCode::MalformedData: return "MalformedData";
    case ErrorCode::DuplicateEntry: return "DuplicateEntry";
    case ErrorCode::SigmaIntViolation: return "SigmaIntViolation";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::InexactDivision: return "InexactDivision";
  }
  return "Unknown";
}

}  // namespace dmu
