#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kecore {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A vertex set or matching was used with a graph that does not own it.
class OwnershipError : public Error {
 public:
  using Error::Error;
};

/// Missing vertex or edge, or an argument outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed the configured size cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The input violates a structural hypothesis of the operation
/// (e.g. a unicyclic-only routine applied to some other graph).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace kecore
