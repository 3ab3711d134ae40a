#pragma once

#include <stdexcept>
#include <string>

namespace abcov {

// Base of every exception thrown by the library. The CLI maps all of these
// to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input data (bad moduli, unreduced entries,
// characters over the wrong group, unparsable files).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition (invalid matrix,
// non-full span, wrong involution shape, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Checked 64-bit arithmetic overflowed. Never silently wrapped.
class OverflowError : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same quantity disagreed, or a value
// that must be integral was not. Signals a bug or an invalid family that
// slipped through validation.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace abcov
