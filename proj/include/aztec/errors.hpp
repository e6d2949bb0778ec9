#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aztec {

// Base of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidFamily : public Error {
 public:
  using Error::Error;
};

class MalformedPath : public Error {
 public:
  using Error::Error;
};

class NotDisjoint : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotATiling : public Error {
 public:
  using Error::Error;
};

// An edge path family that does not fit its region.
class InvalidEdgeFamily : public InvalidFamily {
 public:
  using InvalidFamily::InvalidFamily;
};

// Raised by the pair operations of the combing engine when called outside
// their domain.
class PreconditionViolation : public Error {
 public:
  enum class Reason {
    IndexOutOfRange,
    VerticalStepsBeforeColumn,
    ResidualVerticalSteps,
    InsufficientVerticalSteps,
    HeightMismatch,
    NotDisjoint,
    NotInDomain,
  };

  PreconditionViolation(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

const char* to_string(PreconditionViolation::Reason reason);

// Text input errors carry a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace aztec
