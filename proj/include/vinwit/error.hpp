#pragma once

#include <stdexcept>
#include <string>

namespace vinwit {

/// Base class for every error this library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violated an operation's precondition (bad label, asymmetric matrix...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Division by zero in exact arithmetic.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A budget (cosets, points, iterations) was exhausted.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace vinwit
