#pragma once

#include <stdexcept>
#include <string>

namespace symbidisc {

enum class ErrorKind {
    InvalidArgument,
    ShapeMismatch,
    NonSquare,
    NonFinite,
    NonCommuting,
    NotContraction,
    TriangularizationFailed,
    NoSquareRoot,
    NonCommutingRoot,
    ResidualTooLarge,
    NumericalRadiusTooLarge,
    NotPure,
    NoConvergence,
    VerificationFailed,
    InvariantViolation,
    Parse,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace symbidisc
