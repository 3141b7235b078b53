#pragma once

#include <stdexcept>
#include <string>

namespace sally {

// Input-side failures: malformed expressions, mixed-ring operands, violated
// operation preconditions. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& message, int line, int column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

class NotZeroDimensionalError : public InputError {
public:
  explicit NotZeroDimensionalError(const std::string& variable)
      : InputError("not-zero-dimensional: no power of '" + variable +
                   "' lies in the ideal up to the degree cap"),
        variable_(variable) {}
  const std::string& variable() const { return variable_; }

private:
  std::string variable_;
};

class ContainmentError : public InputError {
public:
  explicit ContainmentError(const std::string& witness)
      : InputError("containment failure: generator '" + witness +
                   "' lies outside the larger ideal"),
        witness_(witness) {}
  const std::string& witness() const { return witness_; }

private:
  std::string witness_;
};

class NotAReductionError : public InputError {
public:
  explicit NotAReductionError(int largest_checked)
      : InputError("not-a-reduction-up-to-" + std::to_string(largest_checked)),
        largest_checked_(largest_checked) {}
  int largest_checked() const { return largest_checked_; }

private:
  int largest_checked_;
};

// Resource-side failures: degree-cap aborts and stabilization windows that ran
// out. The CLI maps these to exit code 3.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class StabilizationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class InsufficientWindowError : public StabilizationError {
public:
  using StabilizationError::StabilizationError;
};

}  // namespace sally
