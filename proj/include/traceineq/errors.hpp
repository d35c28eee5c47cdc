#pragma once

#include <stdexcept>
#include <string>

namespace traceineq {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand shapes do not match, or an operation requires a specific dimension.
struct DimensionMismatch : Error {
    using Error::Error;
};

// The iterative eigensolver did not reach its off-diagonal threshold.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// A scalar function was evaluated outside its declared domain.
struct DomainViolation : Error {
    using Error::Error;
};

// A matrix required to be positive semidefinite has an eigenvalue below
// the clamping band.
struct NegativeEigenvalue : Error {
    using Error::Error;
};

// An input that must be strictly positive is zero or negative.
struct NonPositiveInput : Error {
    using Error::Error;
};

// A reproduction run disagreed with its frozen golden value.
struct GoldenMismatch : Error {
    using Error::Error;
};

// Malformed user input: bad weights, bad files, bad configuration.
struct InvalidInput : Error {
    using Error::Error;
};

}  // namespace traceineq
