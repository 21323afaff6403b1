#pragma once

#include <stdexcept>
#include <string>

namespace hyperiso {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a documented precondition (singular form, p | n, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A constant needed by the formula vanishes modulo the characteristic.
class CharacteristicObstruction : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Request is well-formed but outside what the library can do (number fields, huge fields).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
};

}  // namespace hyperiso
