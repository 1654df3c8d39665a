#include "unitlat/error.hpp"

namespace unitlat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::ReducibleDetected: return "ReducibleDetected";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::BallTooWide: return "BallTooWide";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotASubfield: return "NotASubfield";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::NotGalois: return "NotGalois";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotWeakMinkowski: return "NotWeakMinkowski";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::FixedFieldConstructionFailed: return "FixedFieldConstructionFailed";
    case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorCode::OrderBudgetExceeded: return "OrderBudgetExceeded";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::InvarianceViolated: return "InvarianceViolated";
    case ErrorCode::AllZero: return "AllZero";
    case ErrorCode::SingularBlock: return "SingularBlock";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::SetupViolated: return "SetupViolated";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::MissingClassNumber: return "MissingClassNumber";
    case ErrorCode::CombinatorialBudgetExceeded: return "CombinatorialBudgetExceeded";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code), detail_(detail) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace unitlat
