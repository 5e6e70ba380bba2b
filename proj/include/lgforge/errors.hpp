#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgforge {

// Root of every error the library throws. The CLI maps InputError to exit
// status 2 and everything else to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: expression syntax, unknown names, file formats.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnknownVariableError : public InputError {
 public:
  UnknownVariableError(const std::string& name, std::size_t position)
      : InputError("unknown variable '" + name + "' at position " +
                   std::to_string(position)),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class FormatError : public InputError {
 public:
  FormatError(const std::string& message, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ZeroDenominatorError : public InputError {
 public:
  using InputError::InputError;
};

class NotLaurentError : public Error {
 public:
  using Error::Error;
};

class RankMismatchError : public Error {
 public:
  RankMismatchError(std::size_t expected, std::size_t actual)
      : Error("rank mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
};

class NotInSublatticeError : public Error {
 public:
  using Error::Error;
};

class InvalidFunctionalError : public Error {
 public:
  using Error::Error;
};

class InconsistentSystemError : public Error {
 public:
  using Error::Error;
};

class InvarianceViolationError : public Error {
 public:
  using Error::Error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

}  // namespace lgforge
