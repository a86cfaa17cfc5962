#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperrel {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Requested size exceeds an enumeration guard.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// Operation precondition does not hold for the given instance.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number, 0 when the input is a single expression.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hyperrel
