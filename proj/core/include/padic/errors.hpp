#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace padic {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is zero") {}
};

struct PrimeMismatch : Error {
    PrimeMismatch() : Error("operands use different primes") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// A value (or a norm) could not be determined at the available precision.
/// `depth`, when set, is the iteration index at which precision ran out.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what, std::optional<std::size_t> at = {})
        : Error(what), depth(at) {}
    std::optional<std::size_t> depth;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Operands live in different function spaces (prime, variables, weight or
/// truncation degree differ).
struct SpaceMismatch : Error {
    using Error::Error;
};

struct InsufficientDepth : Error {
    using Error::Error;
};

/// The norm sequence is still growing against the requested alpha at the
/// truncation depth, so the sup defining the alpha-norm cannot be finite.
struct NotInEAlpha : Error {
    using Error::Error;
};

struct OutsideDisk : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace padic
