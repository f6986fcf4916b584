#pragma once

#include <stdexcept>
#include <string>

namespace eprdist {

/// Raised when an input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string &what) : std::invalid_argument(what) {}
};

/// Raised when a computation leaves the domain where the model is defined
/// (e.g. a QBER below the depolarizing floor) or a numerical routine fails.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

/// Raised for file-system failures (unreadable input, unwritable output).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string &what) : std::runtime_error(what) {}
};

}  // namespace eprdist
