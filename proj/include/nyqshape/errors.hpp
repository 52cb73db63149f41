// SPDX-License-Identifier: Apache-2.0
//
// Part of nyqshape, a Nyquist pulse-shaping filter toolkit.

#ifndef NYQSHAPE_ERRORS_HPP
#define NYQSHAPE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nyqshape {

/// Base class for all nyqshape exceptions.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user-supplied parameters (rejected before any computation starts).
struct ValidationError : Error {
    using Error::Error;
};

/// A computation produced numerically unusable results.
struct NumericalError : Error {
    using Error::Error;
};

struct InvalidSpec : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidRange : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidArg : ValidationError {
    using ValidationError::ValidationError;
};

struct FamilyNotNyquist : ValidationError {
    using ValidationError::ValidationError;
};

struct ParityViolation : ValidationError {
    using ValidationError::ValidationError;
};

struct GridTooCoarse : ValidationError {
    using ValidationError::ValidationError;
};

struct DegenerateFilter : NumericalError {
    using NumericalError::NumericalError;
};

struct NumericalAsymmetry : NumericalError {
    using NumericalError::NumericalError;
};

} // namespace nyqshape

#endif // NYQSHAPE_ERRORS_HPP
