#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace einf {

// Base of every error raised by the algebra kernel.  The CLI maps ParseError
// (and subclasses) to exit code 2 and every other einf::Error to exit code 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live over different coefficient rings.
class TorsionMismatch : public Error {
 public:
  TorsionMismatch(long long a, long long b)
      : Error("incompatible coefficient rings: torsion " + std::to_string(a) +
              " vs " + std::to_string(b)) {}
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class ConventionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// A value violates a type invariant (not a permutation, inhomogeneous
// element, digit outside {0,1,2}, ...).
class InvalidValue : public Error {
 public:
  using Error::Error;
};

// A request is well-formed but outside the domain of the operation, e.g. a
// Bockstein at the prime 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

class CoefficientOverflow : public Error {
 public:
  CoefficientOverflow() : Error("coefficient overflow in 64-bit arithmetic") {}
};

// Malformed element literal.  `column` is 1-based; 0 means "no position".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t column)
      : Error(column == 0 ? message
                          : "column " + std::to_string(column) + ": " + message),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// The literal parsed, but its shape does not fit the requested kind.
class ShapeError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace einf
