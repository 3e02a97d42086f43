#pragma once

#include <stdexcept>
#include <string>

namespace factorlab {

// Input outside the mathematical domain of an operation (negative sqrt, gcd(0,0), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input the operation refuses by contract (e.g. a modulus sharing a factor with 6).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// 2 and 3 are primes but have no 6x +/- 1 decomposition.
class SmallPrimeInput : public UnsupportedInput {
 public:
  using UnsupportedInput::UnsupportedInput;
};

// A bounded computation ran out of its resource budget.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace factorlab
