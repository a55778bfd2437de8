#pragma once

#include <stdexcept>
#include <string>

namespace rls {

/// Argument outside the mathematical domain of an operation (composite
/// modulus, Im z <= 0, even m for tan_coeff, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Bernoulli sum over j = 1..k was requested with k = 0.
class EmptySumError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The numerical layer could not meet its accuracy contract.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rls
