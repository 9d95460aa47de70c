#pragma once

#include <stdexcept>
#include <string>

namespace morseflow {

// Exception hierarchy shared by the library and the CLI exit-code mapping.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible shapes or ground fields.
struct DimensionError : Error {
    using Error::Error;
};

// An operation's stated precondition does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

struct NumericalError : Error {
    using Error::Error;
};

// Matrix to invert is singular to working precision.
struct SingularityError : NumericalError {
    using NumericalError::NumericalError;
};

// Input too ill-conditioned for the requested accuracy.
struct ConditioningError : NumericalError {
    using NumericalError::NumericalError;
};

// A discrete decision (rank, cell membership) falls inside an ambiguity band;
// refusing to answer beats guessing.
struct IndeterminateError : NumericalError {
    using NumericalError::NumericalError;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace morseflow
