#pragma once

#include <stdexcept>
#include <string>

namespace pfl {

enum class ErrorKind {
  ZeroInverse,
  DivisionByZero,
  ZeroArgument,
  DegreeOverflow,
  DegreeMismatch,
  DimensionMismatch,
  NotInSymbolForm,
  AlgebraMismatch,
  WrongCharacteristic,
  UnsupportedField,
  UnsupportedModel,
  UnsupportedSlot,
  SingularForm,
  FoldMismatch,
  HypothesisNotEstablished,
  IdentityFailed,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pfl
