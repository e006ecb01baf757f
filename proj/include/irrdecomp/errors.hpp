#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irrdecomp {

/// Caller violated a precondition (length mismatch, zero coordinate, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that the algorithms rely on did not hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The brute-force staircase box would exceed the configured cell budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ideal or component file. Line numbers are 1-based; 0 means
/// the error is not tied to a particular line (e.g. missing terminator).
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace irrdecomp
