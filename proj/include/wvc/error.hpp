#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wvc {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad permutation, non-positive weight, out-of-range index, ...
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Scoring vector length does not match the candidate count.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A checked 64-bit operation overflowed.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// The requested solver/rule combination is not supported.
class UnsupportedRule : public Error {
public:
    using Error::Error;
};

/// An exhaustive search would exceed its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A construction's preconditions do not hold (e.g. m <= t for a reduction,
/// fewer than three distinct scoring values).
class ConstructionError : public Error {
public:
    using Error::Error;
};

using Weight = std::int64_t;

inline Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in addition");
    return r;
}

inline Weight checked_sub(Weight a, Weight b) {
    Weight r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticError("integer overflow in subtraction");
    return r;
}

inline Weight checked_mul(Weight a, Weight b) {
    Weight r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in multiplication");
    return r;
}

}  // namespace wvc
