#pragma once

#include <stdexcept>
#include <string>

namespace unitlat {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DomainError,
  SchemaError,
  NotSquarefree,
  ReducibleDetected,
  PrecisionExhausted,
  BallTooWide,
  RankDeficient,
  RankMismatch,
  NotPositiveDefinite,
  EnumerationBudgetExceeded,
  InsufficientPrecision,
  NotAUnit,
  NotASubfield,
  NotTotallyReal,
  NotGalois,
  NotNormal,
  NotWeakMinkowski,
  SearchExhausted,
  FixedFieldConstructionFailed,
  ReconstructionFailed,
  OrderBudgetExceeded,
  IndexMismatch,
  InvarianceViolated,
  AllZero,
  SingularBlock,
  ResidualTooLarge,
  SetupViolated,
  BudgetExceeded,
  NotEven,
  MissingClassNumber,
  CombinatorialBudgetExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

inline void require(bool cond, ErrorCode code, const std::string& detail) {
  if (!cond) fail(code, detail);
}

}  // namespace unitlat
