#pragma once

#include <stdexcept>
#include <string>

namespace eqkt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input (bad matrix, non-reduced word, bad bitword, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A division in the character ring has no exact quotient.
class InexactDivision : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace eqkt
