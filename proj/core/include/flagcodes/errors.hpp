#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagcodes {

/// Machine-readable error classes. The CLI prints `error_class()` verbatim.
enum class ErrorKind {
  NotAPrimePower,
  UnsupportedField,
  DivisionByZero,
  OutOfRange,
  AmbientMismatch,
  FieldMismatch,
  InvalidDimension,
  InvalidArgument,
  NotNested,
  DimensionMismatch,
  TypeMismatch,
  IndexOutOfRange,
  TooFewFlags,
  Unsatisfiable,
  InfeasiblePattern,
  NotASubflag,
  NotCoherent,
  SyntaxError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view error_class() const noexcept { return to_string(kind_); }

 private:
  ErrorKind kind_;
};

/// Parse failures carry the 1-based line where they were detected (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& what)
      : Error(kind, line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace flagcodes
