#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcc {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands belong to prime fields with different moduli.
struct ContextMismatchError : Error {
    using Error::Error;
};

/// Division (or inversion) by zero in a field or polynomial ring.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// gcd(0, 0) requested.
struct UndefinedGcdError : Error {
    using Error::Error;
};

/// Modular inverse of a non-unit requested.
struct NotInvertibleError : Error {
    using Error::Error;
};

/// A generator triple violates one of the construction conditions; the
/// message names the failing component and condition.
struct InvalidGeneratorError : Error {
    using Error::Error;
};

/// Vector/matrix shapes do not line up.
struct DimensionError : Error {
    using Error::Error;
};

/// Requested work exceeds a configured enumeration cap.
struct TooLargeError : Error {
    TooLargeError(const std::string& msg, long double required_budget)
        : Error(msg), required(required_budget) {}
    long double required;
};

/// An internal cross-check failed.  Not a recoverable user error: it means a
/// bug, or an invalid spec slipped through validation.
struct InvariantViolationError : Error {
    using Error::Error;
};

/// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    std::size_t line;
};

}  // namespace dcc
