#ifndef HGCALC_ERRORS_HPP
#define HGCALC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgcalc {

enum class ErrorCode {
  IndexOutOfRange,
  EmptySide,
  Overlap,
  Duplicate,
  TooSmall,
  SelfLoop,
  EmptyHypergraph,
  Overflow,
  LengthMismatch,
  InvalidP,
  EmptyInput,
  NonPositive,
  UnsupportedMode,
  NotAGraph,
  InvalidArity,
  TooLarge,
  OutOfLemmaRange,
  Inconsistent,
  AmbiguousTensor,
  NoConsistentHypergraph,
  MalformedTensor,
  NotBipartite,
  MissingHint,
  InvalidStructure,
  InvalidSize,
  InfeasibleParams,
  InvalidArgument,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message);

  // 0 when the error is not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace hgcalc

#endif
