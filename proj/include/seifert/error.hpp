#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace seifert {

/// Failure categories raised by the library. The CLI prints `error_name()`
/// on stderr and maps ParseError to exit code 2, everything else to 3.
enum class ErrorCode {
  SingularMatrix,
  NonCoprimeModuli,
  NonCoprime,
  BaseMismatch,
  InvalidData,
  ZeroDegree,
  InvalidPair,
  JOutOfRange,
  NonIsolatedCritical,
  WrongOrientation,
  DegenerateReducible,
  OppositeSign,
  FromReducible,
  ParseError,
};

constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NonCoprimeModuli: return "NonCoprimeModuli";
    case ErrorCode::NonCoprime: return "NonCoprime";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::InvalidData: return "InvalidData";
    case ErrorCode::ZeroDegree: return "ZeroDegree";
    case ErrorCode::InvalidPair: return "InvalidPair";
    case ErrorCode::JOutOfRange: return "JOutOfRange";
    case ErrorCode::NonIsolatedCritical: return "NonIsolatedCritical";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::DegenerateReducible: return "DegenerateReducible";
    case ErrorCode::OppositeSign: return "OppositeSign";
    case ErrorCode::FromReducible: return "FromReducible";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace seifert
