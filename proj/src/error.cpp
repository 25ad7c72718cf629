#include "symbidisc/error.hpp"

namespace symbidisc {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::NonCommuting: return "NonCommuting";
    case ErrorKind::NotContraction: return "NotContraction";
    case ErrorKind::TriangularizationFailed: return "TriangularizationFailed";
    case ErrorKind::NoSquareRoot: return "NoSquareRoot";
    case ErrorKind::NonCommutingRoot: return "NonCommutingRoot";
    case ErrorKind::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorKind::NumericalRadiusTooLarge: return "NumericalRadiusTooLarge";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

}  // namespace symbidisc
