#pragma once

#include <stdexcept>
#include <string>

namespace fatcode {

// Every failure mode the library can signal. CLI maps ParseError-family
// kinds to exit code 2 and everything else to exit code 1.
enum class ErrorKind {
  ZeroVector,
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  NonPrime,
  TooLarge,
  Overflow,
  UnsupportedField,
  RankDeficient,
  DuplicatePoint,
  IndexOutOfRange,
  CapExceeded,
  NotNzd,
  DegenerateAfterRetries,
  NotHomogeneous,
  NotReduced,
  HypothesisUnmet,
  UnknownDirective,
  BadArity,
  ParseError,
  Io,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

  // True for errors produced while reading scheme files or CLI arguments.
  bool is_parse_error() const {
    return kind_ == ErrorKind::UnknownDirective || kind_ == ErrorKind::BadArity ||
           kind_ == ErrorKind::ParseError || kind_ == ErrorKind::NonPrime ||
           kind_ == ErrorKind::Usage;
  }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind kind);

}  // namespace fatcode
