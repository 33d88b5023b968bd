#pragma once

#include <stdexcept>
#include <string>

namespace ohg {

// Base of every error raised by the library. The C API maps each subclass to
// one status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance text: JSON syntax or schema. Messages carry a line and
// column or a field path.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A function was given a map or label set that does not match its domain,
// e.g. a switching function missing a vertex.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bad call arguments: unknown labels, anchor/length parity mismatch,
// infeasible generator parameters, mismatched matrix labels.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Walk enumeration exceeded its configured ceiling.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A walk whose anchors and incidences do not fit together.
class StructuralError : public Error {
 public:
  using Error::Error;
};

class NotTwoUniformError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace ohg
