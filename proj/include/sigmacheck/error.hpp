#pragma once

#include <stdexcept>
#include <string>

namespace sigmacheck {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (n = 0, nonprime where a prime is required, ...).
class InputError : public Error {
public:
    using Error::Error;
};

/// An enclosure violates the domain of the operation applied to it
/// (log of a nonpositive interval, division by an interval containing zero).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested working precision exceeds what the implementation supports.
class PrecisionOverflow : public Error {
public:
    using Error::Error;
};

/// harmonic_exact called above its exact cutoff.
class CutoffExceeded : public Error {
public:
    using Error::Error;
};

/// A fixed-width sieve value would not fit in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Two greedy benefits could not be separated at the precision cap.
class FourExponentialsTie : public Error {
public:
    using Error::Error;
};

}  // namespace sigmacheck
