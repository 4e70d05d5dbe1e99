#include "pfl/error.hpp"

namespace pfl {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInSymbolForm: return "NotInSymbolForm";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::UnsupportedModel: return "UnsupportedModel";
    case ErrorKind::UnsupportedSlot: return "UnsupportedSlot";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::FoldMismatch: return "FoldMismatch";
    case ErrorKind::HypothesisNotEstablished: return "HypothesisNotEstablished";
    case ErrorKind::IdentityFailed: return "IdentityFailed";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pfl
