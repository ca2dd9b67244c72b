#pragma once

#include <stdexcept>
#include <string>

namespace tlc {

enum class ErrorCode {
  OddLength,
  BadMultiplicity,
  NotTreeLike,
  InvalidTree,
  Colliding,
  ParseError,
  DegenerateLeafCount,
  PathReversing,
  SizeLimit,
  NotVertexCentered,
  RealizationFailed,
  TangentialCrossing,
};

const char* to_string(ErrorCode code);

/// Exception carrying a machine-readable code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with a 1-based position in the input text.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace tlc
