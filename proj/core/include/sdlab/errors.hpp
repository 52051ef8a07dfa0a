#pragma once

#include <stdexcept>
#include <string>

namespace sdlab {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad index, ambient mismatch, syntax).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A quotient I/J with I contained in J.
class EmptyQuotientError : public InputError {
 public:
  using InputError::InputError;
};

/// An operation was called outside its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates an engine bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace sdlab
