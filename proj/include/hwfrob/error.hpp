#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hwfrob {

/// Caller misuse: mismatched rings, moduli, shapes or twists.
class UsageError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Rejected user input (problem files, generators, parameters).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm precondition does not hold for the requested path.
class DispatchError : public InputError {
 public:
  using InputError::InputError;
};

/// A parse failure at a byte offset of the source text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        message_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An invariant that holds by construction was violated. Signals a bug or
/// inputs that silently broke a precondition (e.g. a non-resolution).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hwfrob
