#include "hgcalc/errors.hpp"

namespace hgcalc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::Duplicate: return "Duplicate";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidP: return "InvalidP";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::UnsupportedMode: return "UnsupportedMode";
    case ErrorCode::NotAGraph: return "NotAGraph";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::OutOfLemmaRange: return "OutOfLemmaRange";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::AmbiguousTensor: return "AmbiguousTensor";
    case ErrorCode::NoConsistentHypergraph: return "NoConsistentHypergraph";
    case ErrorCode::MalformedTensor: return "MalformedTensor";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::MissingHint: return "MissingHint";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorCode::ParseError,
            line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

}  // namespace hgcalc
