#pragma once

#include <stdexcept>
#include <string>

namespace qspline {

// Argument outside the mathematical domain of a function (z = 0 with
// Sc(q) < 0, square root of a negative real, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Gamma evaluated at one of its poles.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A series or tail could not be brought under the requested tolerance.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qspline
