#pragma once

#include <stdexcept>

namespace perimod {

/// Caller passed something malformed: mixed rings, bad text, non-prime modulus.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments are well formed but fall outside an operation's mathematical domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A brute-force scan or enumeration would exceed its element budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace perimod
