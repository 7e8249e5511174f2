#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace akp {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed field element, polynomial, value or budget text.
/// `position` is the 1-based column of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at column " + std::to_string(position)), message_(what), position_(position) {}

  /// The message without the column suffix.
  const std::string& message() const noexcept { return message_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An operation was called outside its domain (non-monic divisor, b = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A valuation chain would violate one of its construction invariants.
/// `condition` names the violated condition in a stable, machine-readable form.
class ChainError : public Error {
 public:
  ChainError(std::string condition, const std::string& detail)
      : Error(condition + ": " + detail), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// A result that a theorem guarantees failed to verify. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace akp
