#pragma once

#include <stdexcept>
#include <string>

namespace verlab {

// Bad arguments from a caller (wrong field, unknown option).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Group/level combination outside the range where the weight sums are defined.
class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition failed (non-real element, reflection leaving the alcove).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Interval evaluation too coarse at the requested precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an exact result contradicts a proven property (non-integral
// Verlinde sum, vanishing alcove factor). Always an engine bug.
class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace verlab
