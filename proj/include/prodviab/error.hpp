#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace prodviab {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  DimensionMismatch,
  NotZPlus,
  BadSubset,
  RipViolated,
  NotAcyclic,
  BudgetExceeded,
  DimensionTooLarge,
  WrongShape,
  CriteriaDisagreement,
  OracleDisagreement,
  ImplicationViolation,
  InternalError,
  IoError,
};

[[nodiscard]] constexpr auto to_string(ErrorCode code) -> std::string_view {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotZPlus: return "NotZPlus";
    case ErrorCode::BadSubset: return "BadSubset";
    case ErrorCode::RipViolated: return "RipViolated";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::CriteriaDisagreement: return "CriteriaDisagreement";
    case ErrorCode::OracleDisagreement: return "OracleDisagreement";
    case ErrorCode::ImplicationViolation: return "ImplicationViolation";
    case ErrorCode::InternalError: return "InternalError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] auto code() const noexcept -> ErrorCode { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace prodviab
