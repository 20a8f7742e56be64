#pragma once

#include <stdexcept>
#include <string>

namespace brokerlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid argument values (out-of-range parameters, bad configuration).
struct ParameterError : Error {
    using Error::Error;
};

// Root bracketing failed: f has the same sign at both interval endpoints.
struct BracketError : Error {
    using Error::Error;
};

// Quadrature or iteration did not reach the requested tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

// An integrand or callback produced a non-finite value.
struct EvaluationError : Error {
    using Error::Error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// A density vanished where a positive value is required.
struct DegenerateDensityError : Error {
    using Error::Error;
};

}  // namespace brokerlab
