#pragma once

#include <stdexcept>
#include <string>

namespace vpv {

/// Malformed request: empty argument lists, unknown identifiers, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation (n = 0, |q| >= 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would exceed its configured size cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not (rounding residual too large, oracle mismatch).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace vpv
