#pragma once

#include <stdexcept>
#include <string>

namespace stringy {

/// Malformed or inconsistent user input (bad file, shape mismatch, rank
/// data that violates exactness). Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but fails a geometric validation (dimension gate,
/// link not a pseudomanifold). Also exit code 2.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// A computed invariant that must hold failed. Signals a bug. Exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace stringy
