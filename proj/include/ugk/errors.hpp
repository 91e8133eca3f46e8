#pragma once

#include <stdexcept>
#include <string>

namespace ugk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (DSL, set literals, point/cylinder expressions).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A presentation that violates the standing assumptions (sinks, RFUM, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (undefined concatenation,
/// shift of a length-zero point, point outside a bisection source, ...).
class UndefinedError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class NormalizationOverflow : public Error {
 public:
  using Error::Error;
};

class WitnessNotFound : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace ugk
