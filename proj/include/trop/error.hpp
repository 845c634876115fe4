#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

enum class ErrorKind {
  ZeroVector,
  NotFullRank,
  DimMismatch,
  ZeroPolynomial,
  Parse,
  RequiresHomogeneous,
  NotZeroDimensional,
  BadCodim,
  MultiplicityCountMismatch,
  InvalidMultiplicity,
  NotPure,
  MonomialHypersurfaceEmpty,
  ZeroIdeal,
  UnitIdeal,
  ConventionMismatch,
  GenericityExhausted,
  Schema,
};

inline std::string_view errorKindName(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::ZeroVector: return "ZeroVector";
  case ErrorKind::NotFullRank: return "NotFullRank";
  case ErrorKind::DimMismatch: return "DimMismatch";
  case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorKind::Parse: return "ParseError";
  case ErrorKind::RequiresHomogeneous: return "RequiresHomogeneous";
  case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
  case ErrorKind::BadCodim: return "BadCodim";
  case ErrorKind::MultiplicityCountMismatch: return "MultiplicityCountMismatch";
  case ErrorKind::InvalidMultiplicity: return "InvalidMultiplicity";
  case ErrorKind::NotPure: return "NotPure";
  case ErrorKind::MonomialHypersurfaceEmpty: return "MonomialHypersurfaceEmpty";
  case ErrorKind::ZeroIdeal: return "ZeroIdeal";
  case ErrorKind::UnitIdeal: return "UnitIdeal";
  case ErrorKind::ConventionMismatch: return "ConventionMismatch";
  case ErrorKind::GenericityExhausted: return "GenericityExhausted";
  case ErrorKind::Schema: return "SchemaError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(errorKindName(kind)) + ": " + what), kind_(kind),
        message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

  /// Parse and schema problems are usage errors; everything else is a
  /// mathematical/domain error.
  bool isInputError() const noexcept {
    return kind_ == ErrorKind::Parse || kind_ == ErrorKind::Schema;
  }

private:
  ErrorKind kind_;
  std::string message_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

} // namespace trop
