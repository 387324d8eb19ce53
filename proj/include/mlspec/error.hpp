#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mlspec {

// Every anticipated failure carries one of these codes. The CLI prints the
// name verbatim, so the spellings are part of the public interface.
enum class ErrorCode {
  ZeroPolynomial,
  InexactDivision,
  VariableCollision,
  ZeroConstantTerm,
  DegreeTooSmall,
  NonMonic,
  ParseError,
  NonConvergence,
  SingularMatrix,
  DimensionMismatch,
  DegenerateGap,
  NotProximal,
  PointsCoincide,
  PointNotInterior,
  InvalidDomain,
  InvalidOrders,
  InvalidRepresentation,
  RelatorViolation,
  UnexpectedNonProximal,
  TableMismatch,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::VariableCollision: return "VariableCollision";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NonMonic: return "NonMonic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateGap: return "DegenerateGap";
    case ErrorCode::NotProximal: return "NotProximal";
    case ErrorCode::PointsCoincide: return "PointsCoincide";
    case ErrorCode::PointNotInterior: return "PointNotInterior";
    case ErrorCode::InvalidDomain: return "InvalidDomain";
    case ErrorCode::InvalidOrders: return "InvalidOrders";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::RelatorViolation: return "RelatorViolation";
    case ErrorCode::UnexpectedNonProximal: return "UnexpectedNonProximal";
    case ErrorCode::TableMismatch: return "TableMismatch";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace mlspec
