#pragma once

#include <stdexcept>
#include <string>

namespace operadkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes, sizes or slot indices that do not fit together.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Scalars or containers from two different fields were combined.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A query whose result (or an intermediate) lies above the stored
/// truncation window.
class TruncationExceeded : public Error {
 public:
  using Error::Error;
};

/// Operation requires char != 2.
class CharTwo : public Error {
 public:
  using Error::Error;
};

class NotATrivial : public Error {
 public:
  using Error::Error;
};

class NotGPerm : public Error {
 public:
  using Error::Error;
};

class NotPGPerm : public Error {
 public:
  using Error::Error;
};

class NotCommutative : public Error {
 public:
  using Error::Error;
};

class MissingTyping : public Error {
 public:
  using Error::Error;
};

/// Input operad or algebra failed its structural axioms.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// The denominator of a Hilbert series has a root that is not a root of
/// unity (so a root strictly inside the unit disk).
class NonPolynomialGrowth : public Error {
 public:
  using Error::Error;
};

/// Malformed structure-constants document. `location` is a JSON path.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

}  // namespace operadkit
