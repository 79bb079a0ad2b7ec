#pragma once

#include <stdexcept>
#include <string>

namespace dqwell {

/// Input outside an operation's domain (bad index, non-positive beta, N too
/// small for a two-level model, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed-form antidifference whose sine denominator vanishes.
class SingularQuadrature : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical procedure could not reach its target (series cap hit, ...).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dqwell
