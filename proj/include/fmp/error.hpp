#pragma once

#include <stdexcept>
#include <string>

namespace fmp {

/// Raised when an arithmetic precondition is violated (zero inverse, modulus mismatch).
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A rational coefficient has no meaning modulo p. Sweeps report these primes as skips.
class ExceptionalPrime : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Argument outside the supported domain (bad index syntax, r too large, oracle cap exceeded).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fmp
