#pragma once

#include <stdexcept>
#include <string>

namespace essentia {

/// Input outside the mathematical domain of an operation (zero where a
/// non-zero element is required, mixed rings, malformed text, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input inside the domain but beyond a documented desk-scale bound.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation called while its stated precondition does not hold.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace essentia
