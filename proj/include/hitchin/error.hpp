#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hitchin {

enum class ErrorCode {
  InvalidArgument,
  NonDivisible,
  ZeroConstantTerm,
  TailNonzero,
  DegreeOverflow,
  LengthMismatch,
  TrivialCharacter,
  TrivialElement,
  IdentityViolation,
  UnsupportedCombination,
  IncompatibleTypes,
  InvalidHNType,
  InvalidFiltration,
  ExpressionMismatch,
  NonIntegerWeight,
  EmptyProfile,
  NonPositiveEuler,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonDivisible: return "NonDivisible";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::TailNonzero: return "TailNonzero";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TrivialCharacter: return "TrivialCharacter";
    case ErrorCode::TrivialElement: return "TrivialElement";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
    case ErrorCode::IncompatibleTypes: return "IncompatibleTypes";
    case ErrorCode::InvalidHNType: return "InvalidHNType";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::ExpressionMismatch: return "ExpressionMismatch";
    case ErrorCode::NonIntegerWeight: return "NonIntegerWeight";
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::NonPositiveEuler: return "NonPositiveEuler";
  }
  return "Unknown";
}

/// True for codes that mean a computed identity or cross-check failed,
/// as opposed to the caller handing in bad input.
constexpr bool is_verification_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonDivisible:
    case ErrorCode::TailNonzero:
    case ErrorCode::DegreeOverflow:
    case ErrorCode::IdentityViolation:
    case ErrorCode::ExpressionMismatch:
    case ErrorCode::NonIntegerWeight:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

namespace detail {

inline void require(bool condition, const std::string& what,
                    ErrorCode code = ErrorCode::InvalidArgument) {
  if (!condition) throw Error(code, what);
}

inline void require_genus(int g, int minimum = 2) {
  require(g >= minimum, "genus must be >= " + std::to_string(minimum) + ", got " +
                            std::to_string(g));
}

}  // namespace detail
}  // namespace hitchin
