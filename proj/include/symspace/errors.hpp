#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symspace {

enum class ErrorCode {
  ZeroDivision,
  ParseError,
  DimensionMismatch,
  SingularMatrix,
  NotSymmetric,
  NotPositiveDefinite,
  NoConvergence,
  SingularInput,
  InvalidPoint,
  NotInGroup,
  NotHomomorphism,
  InvolutionNotRespected,
  ZeroParameter,
  NotUnimodular,
  FactorizationFailed,
  DiagramUnsupported,
  ConfigError,
  OddWordLength,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivision: return "ZeroDivision";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::InvolutionNotRespected: return "InvolutionNotRespected";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::FactorizationFailed: return "FactorizationFailed";
    case ErrorCode::DiagramUnsupported: return "DiagramUnsupported";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::OddWordLength: return "OddWordLength";
  }
  return "Unknown";
}

}  // namespace symspace
