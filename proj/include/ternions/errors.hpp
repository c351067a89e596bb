#pragma once

#include <stdexcept>
#include <string>

namespace ternions {

// Base class for every recoverable error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// The modulus handed to a field constructor is not prime.
class NonPrimeModulus : public Error {
public:
  explicit NonPrimeModulus(unsigned long long q)
      : Error("modulus " + std::to_string(q) +
              " is not prime; only prime base fields are supported") {}
};

// A multiplicative inverse of zero was requested; this is a caller bug.
class ZeroInverse : public Error {
public:
  ZeroInverse() : Error("multiplicative inverse of 0 requested") {}
};

// The 0-7 element labelling exists only for the order-8 ring (q = 2).
class LabelsUnavailable : public Error {
public:
  explicit LabelsUnavailable(unsigned q)
      : Error("the 0-7 element labelling is defined only for q = 2, got q = " +
              std::to_string(q)) {}
};

// An enumeration request is larger than the configured tuple budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

// A submodule carries no point of the core geometry; the structural
// assumption behind core extraction is violated.
class DegenerateCore : public Error {
public:
  using Error::Error;
};

}  // namespace ternions
