#pragma once

#include <stdexcept>
#include <string>

namespace zhualg {

// Error taxonomy. InputError (and subclasses) covers malformed or
// out-of-contract inputs; MathError covers computations that fail for a
// mathematical reason (singular system, axiom violation, ...). The CLI maps
// the former to exit code 2 and the latter to exit code 1.

struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionMismatchError : InputError {
    explicit DimensionMismatchError(const std::string& what) : InputError(what) {}
};

struct FixtureSchemaError : InputError {
    explicit FixtureSchemaError(const std::string& what) : InputError(what) {}
};

struct TruncationError : InputError {
    explicit TruncationError(const std::string& what) : InputError(what) {}
};

struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrixError : MathError {
    explicit SingularMatrixError(const std::string& what) : MathError(what) {}
};

struct SpectralError : MathError {
    explicit SpectralError(const std::string& what) : MathError(what) {}
};

}  // namespace zhualg
