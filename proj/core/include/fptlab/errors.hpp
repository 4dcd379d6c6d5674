#pragma once

#include <stdexcept>
#include <string>

namespace fptlab {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A modulus passed as a field characteristic is not prime.
class CompositeModulus : public Error {
 public:
  using Error::Error;
};

/// Requested construction is not available in this characteristic.
class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

/// Multiplicative inverse of zero, or division by a zero element.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Enumeration or construction would exceed the requested size cap.
class FieldTooLarge : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different fields.
class FieldMismatch : public RingMismatch {
 public:
  using RingMismatch::RingMismatch;
};

/// Antiderivative needs to divide by an index that is zero in the field.
class NonInvertibleIndex : public Error {
 public:
  using Error::Error;
};

/// Operation requires field coefficients but the ring is not a field.
class RingNotField : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined for the zero polynomial.
class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// Multinomial parts are negative or do not sum to the top index.
class BadPartition : public Error {
 public:
  using Error::Error;
};

/// A claimed polynomial factorization does not multiply back to the input.
class FactorizationMismatch : public Error {
 public:
  using Error::Error;
};

/// Curve parameter lies in {0, 1}, so the cubic is singular.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

/// Operation is defined only away from characteristic 2.
class CharTwoUnsupported : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured term budget.
class ResourceCap : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class MismatchDetected : public Error {
 public:
  using Error::Error;
};

/// Malformed command-line input.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace fptlab
