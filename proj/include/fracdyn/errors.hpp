#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fracdyn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (negative base with
/// fractional exponent, Gamma argument out of range, bad grid step, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
  DomainError(const std::string& what, int var, double exponent)
      : Error(what), var_(var), exponent_(exponent) {}

  /// Variable index that triggered the error, or -1 when not applicable.
  int var() const { return var_; }
  double exponent() const { return exponent_; }

 private:
  int var_ = -1;
  double exponent_ = 0.0;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Raised when a power x^e with e <= -1 would have to be differentiated or
/// integrated from the initial point 0.
class NonIntegrablePowerError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(msg), line_(line), column_(column) {}

  /// 1-based line; 0 when the input was a single expression.
  std::size_t line() const { return line_; }
  /// 1-based column.
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A closure test failed where a closed form was required.
class NotClosedError : public Error {
 public:
  using Error::Error;
};

/// A reconstructed potential did not reproduce the input field.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracdyn
