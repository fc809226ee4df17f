#pragma once

#include <stdexcept>
#include <string>

namespace barx {

/* Error hierarchy. Mathematical failures carry a witness description so a
 * caller can print exactly which instance broke. */

struct BarxError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CompositionNonzero : BarxError {
    using BarxError::BarxError;
};

struct MaurerCartanViolated : BarxError {
    using BarxError::BarxError;
};

struct TruncationOverflow : BarxError {
    using BarxError::BarxError;
};

struct ArityOverflow : BarxError {
    using BarxError::BarxError;
};

struct NotACoalgebraMorphism : BarxError {
    using BarxError::BarxError;
};

struct NotNormalized : BarxError {
    using BarxError::BarxError;
};

struct SignMismatch : BarxError {
    using BarxError::BarxError;
};

struct SquareNonzero : BarxError {
    using BarxError::BarxError;
};

struct ParseError : BarxError {
    using BarxError::BarxError;
};

struct ValidationError : BarxError {
    using BarxError::BarxError;
};

} // namespace barx
