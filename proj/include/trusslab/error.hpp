#pragma once

#include <stdexcept>
#include <string>

namespace trusslab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Composable shapes or bundle dimensions disagree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NoAntipode : public Error {
 public:
  using Error::Error;
};

// A configured search or enumeration bound would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

// Grouplike extraction could not certify it found every grouplike.
class IncompleteGrouplikes : public Error {
 public:
  using Error::Error;
};

// Input data failed the axioms a construction requires.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace trusslab
