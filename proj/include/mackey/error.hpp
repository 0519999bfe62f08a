#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

// Every error the library raises derives from Error so callers that record
// failures as data (the suite runner) can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("singular matrix") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class NotAHomomorphism : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class VerificationFailed : public Error {
 public:
  using Error::Error;
};

// An extension h g k -> rho(h) F(k) that depends on the chosen factorization.
class IllDefinedExtension : public VerificationFailed {
 public:
  using VerificationFailed::VerificationFailed;
};

// Numerical precision ran out before a p-adic quantity was determined.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace mackey
