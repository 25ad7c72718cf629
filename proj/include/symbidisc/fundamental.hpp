#pragma once

#include "symbidisc/gamma_pairs.hpp"
#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// D_P = (I - P^*P)^{1/2} with an orthonormal basis of its range.
struct DefectData {
    Matrix D;
    Matrix basis;  // n x rank, orthonormal columns
    RealVector eigenvalues;  // eigenvalues of I - P^*P, clamped at 0, ascending
    Eigen::Index rank = 0;
};

/// Solution F of S - S^*P = D_P F D_P, written in the defect-space basis.
struct FundamentalOperator {
    Matrix F;  // rank x rank
    Matrix basis;  // n x rank, the defect basis F is expressed in
    double residual = 0.0;
    double nr = 0.0;  // numerical radius of F

    /// basis F basis^*, the operator on the full space.
    Matrix embedded() const { return basis * F * basis.adjoint(); }
};

/// Eigenvalues of I - P^*P above rank_tol span the defect space.
/// Throws NotContraction when ||P|| > 1 + psd_tol.
DefectData defect_operator(const Matrix& p, const Tolerances& tol = {});

/// F = D_P^+ (S - S^*P) D_P^+, compressed to the defect basis.
///
/// Throws ResidualTooLarge when ||S - S^*P - D_P F D_P|| exceeds
/// residual_tol (1 + ||S||). With verified_contraction set, also throws
/// InvariantViolation if omega(F) > 1 + psd_tol.
FundamentalOperator solve_fundamental(const OperatorPair& pair, const Tolerances& tol = {},
                                      bool verified_contraction = false);

/// The pair on E^N whose fundamental operator is fhat: S carries fhat on the
/// diagonal blocks and fhat^* on the first superdiagonal, P is the block
/// backward shift. Throws NumericalRadiusTooLarge when omega(fhat) > 1 + psd_tol.
OperatorPair truncated_model_from_F(const Matrix& fhat, int blocks, const Tolerances& tol = {});

}  // namespace symbidisc
