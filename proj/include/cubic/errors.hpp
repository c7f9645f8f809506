#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

/// Base class of every error raised by the library.
class CubicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid ring configuration, mismatched configurations or algebras.
class ConfigError : public CubicError {
public:
    using CubicError::CubicError;
};

/// Inversion of a series with zero constant term.
class NonUnitError : public CubicError {
public:
    using CubicError::CubicError;
};

/// Generators do not span a rank-3 module at working precision.
class DegenerateLatticeError : public CubicError {
public:
    using CubicError::CubicError;
};

/// The working precision is too small for the requested computation.
class PrecisionError : public CubicError {
public:
    using CubicError::CubicError;
};

/// An operation was called outside of its documented domain.
class PreconditionError : public CubicError {
public:
    using CubicError::CubicError;
};

/// A family descriptor violates its normalization rules.
class InvalidDescriptorError : public CubicError {
public:
    using CubicError::CubicError;
};

/// An order could not be matched to any family member.
class ClassificationError : public CubicError {
public:
    using CubicError::CubicError;
};

/// The request lies outside the exhaustive-search envelope.
class EnvelopeError : public CubicError {
public:
    using CubicError::CubicError;
};

/// Local invariants were requested for a decomposable order.
class LocalityError : public CubicError {
public:
    using CubicError::CubicError;
};

} // namespace cubic
