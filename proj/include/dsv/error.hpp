#ifndef DSV_ERROR_HPP
#define DSV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dsv {

enum class ErrorCode {
  DuplicateAtom,
  TooManyAtoms,
  EmptyName,
  UnknownAtom,
  FrameMismatch,
  InvalidClause,
  InvalidMass,
  TotalConflict,
  ParseError,
  NormalizationError,
  NegativeLiteralInKnowledge,
  InvalidParams,
  OutOfRange,
  BadDimensions,
  RectOutOfBounds,
  UnsupportedFormat,
  CorruptHeader,
  TruncatedData,
  IoError,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateAtom: return "DuplicateAtom";
    case ErrorCode::TooManyAtoms: return "TooManyAtoms";
    case ErrorCode::EmptyName: return "EmptyName";
    case ErrorCode::UnknownAtom: return "UnknownAtom";
    case ErrorCode::FrameMismatch: return "FrameMismatch";
    case ErrorCode::InvalidClause: return "InvalidClause";
    case ErrorCode::InvalidMass: return "InvalidMass";
    case ErrorCode::TotalConflict: return "TotalConflict";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NormalizationError: return "NormalizationError";
    case ErrorCode::NegativeLiteralInKnowledge: return "NegativeLiteralInKnowledge";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::BadDimensions: return "BadDimensions";
    case ErrorCode::RectOutOfBounds: return "RectOutOfBounds";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::CorruptHeader: return "CorruptHeader";
    case ErrorCode::TruncatedData: return "TruncatedData";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dsv

#endif  // DSV_ERROR_HPP
