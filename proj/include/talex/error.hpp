#pragma once

#include <stdexcept>
#include <string>

namespace talex {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different coefficient domains.
class DomainMismatch : public Error {
public:
    using Error::Error;
};

/// A modulus that was required to be prime is not.
class NotPrime : public Error {
public:
    explicit NotPrime(unsigned long long n) : Error(std::to_string(n) + " is not prime") {}
};

/// Malformed arguments: bad shapes, out-of-range indices, violated preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Malformed input files (knot tables, Cayley tables, reports).
class ParseError : public Error {
public:
    using Error::Error;
};

/// The surjection search visited more nodes than it was allowed to.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(unsigned long long budget)
        : Error("search budget of " + std::to_string(budget) + " nodes exceeded") {}
};

/// Every candidate denominator det((rho x phi)(x_j - 1)) vanished.
class DenominatorVanishes : public Error {
public:
    using Error::Error;
};

} // namespace talex
