#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace flagcycles {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or invariant violated by otherwise well-formed input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Checked integer arithmetic left the int64 range.
class OverflowError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A bounded enumeration hit its cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// The straight corridor from a loop's flag to the requested base is blocked.
class RerouteError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A loop vertex sits on a puncture's crossing ray; the input must be perturbed.
class PerturbationRequired : public DomainError {
 public:
  using DomainError::DomainError;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column,
              std::vector<std::string> expected = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  /// The message without the position prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace flagcycles
