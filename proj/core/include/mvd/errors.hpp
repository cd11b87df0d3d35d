#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means "not known".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates an operation's precondition
/// (disconnected graph, vertex outside the graph, non-total coloring, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// An input exceeds a size guard of an exhaustive procedure.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A coloring that was required to be an MVD-coloring is not one.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvd
