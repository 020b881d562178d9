#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition or malformed input. The CLI maps this to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, int line)
      : PreconditionError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// An enumeration would exceed its configured size limit.
class BudgetExceeded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Iterative solver stopped before meeting its tolerance. CLI exit code 3.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A constructed eigenpair failed its a posteriori residual check.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperspec
