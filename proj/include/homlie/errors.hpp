#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands come from coefficient rings with no legal embedding between them.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("division by the zero element") {}
};

/// A value does not belong to the ring it was declared in (e.g. a rational
/// function in a polynomial ring).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Shapes that do not fit together: ranks, matrix sizes, form degrees.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A construction-time invariant failed (declared inverse is not an inverse,
/// bracket table is not skew, ...).
class InvalidStructureError : public Error {
 public:
  using Error::Error;
};

/// A linear system over the fraction field has no unique solution.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in an expression or structure file. Line and column are
/// 1-based; zero means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace homlie
