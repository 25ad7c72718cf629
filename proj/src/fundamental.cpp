#include "symbidisc/fundamental.hpp"

#include <sstream>

namespace symbidisc {

DefectData defect_operator(const Matrix& p, const Tolerances& tol)
{
    require_square(p, "P");
    require_finite(p, "P");
    const Eigen::Index n = p.rows();
    const double norm = op_norm(p);
    if (norm > 1.0 + tol.psd_tol) {
        std::ostringstream os;
        os << "||P|| = " << norm << " exceeds 1";
        throw Error(ErrorKind::NotContraction, os.str());
    }
    DefectData out;
    if (n == 0) {
        return out;
    }
    const HermitianEigen eig =
        hermitian_eig(hermitian_part(Matrix::Identity(n, n) - p.adjoint() * p));
    out.eigenvalues = eig.values.cwiseMax(0.0);
    const RealVector roots = out.eigenvalues.cwiseSqrt();
    out.D = eig.vectors * roots.cast<cplx>().asDiagonal() * eig.vectors.adjoint();

    Eigen::Index first = 0;
    while (first < n && out.eigenvalues(first) <= tol.rank_tol) {
        ++first;
    }
    out.rank = n - first;
    out.basis = eig.vectors.rightCols(out.rank);
    return out;
}

FundamentalOperator solve_fundamental(const OperatorPair& pair, const Tolerances& tol,
                                      bool verified_contraction)
{
    const Matrix& s = pair.S();
    const Matrix& p = pair.P();
    const DefectData defect = defect_operator(p, tol);
    const Matrix g = s - s.adjoint() * p;

    FundamentalOperator out;
    out.basis = defect.basis;
    const Eigen::Index r = defect.rank;
    const Eigen::Index n = pair.dim();
    if (r > 0) {
        // In the eigenbasis D_P is diagonal, so the pseudoinverse solve is a
        // scaling of basis^* G basis.
        const RealVector inv_roots =
            defect.eigenvalues.tail(r).cwiseSqrt().cwiseInverse();
        const Matrix compressed = defect.basis.adjoint() * g * defect.basis;
        out.F = inv_roots.cast<cplx>().asDiagonal() * compressed *
                inv_roots.cast<cplx>().asDiagonal();
    } else {
        out.F = Matrix(0, 0);
    }
    const Matrix reconstructed = n == 0 ? Matrix(0, 0) : Matrix(defect.D * out.embedded() * defect.D);
    out.residual = n == 0 ? 0.0 : op_norm(g - reconstructed);
    const double cap = tol.residual_tol * (1.0 + op_norm(s));
    if (!(out.residual <= cap)) {
        std::ostringstream os;
        os << "fundamental equation residual " << out.residual << " exceeds " << cap
           << " at defect rank " << r;
        throw Error(ErrorKind::ResidualTooLarge, os.str());
    }
    out.nr = numerical_radius(out.F, tol);
    if (verified_contraction && out.nr > 1.0 + tol.psd_tol) {
        std::ostringstream os;
        os << "numerical radius of the fundamental operator is " << out.nr;
        throw Error(ErrorKind::InvariantViolation, os.str());
    }
    return out;
}

OperatorPair truncated_model_from_F(const Matrix& fhat, int blocks, const Tolerances& tol)
{
    require_square(fhat, "fhat");
    require_finite(fhat, "fhat");
    if (blocks < 1) {
        throw Error(ErrorKind::InvalidArgument, "block count must be positive");
    }
    const double nr = numerical_radius(fhat, tol);
    if (nr > 1.0 + tol.psd_tol) {
        std::ostringstream os;
        os << "omega(fhat) = " << nr << " exceeds 1";
        throw Error(ErrorKind::NumericalRadiusTooLarge, os.str());
    }
    const Eigen::Index k = fhat.rows();
    const Eigen::Index n = k * blocks;
    Matrix s = Matrix::Zero(n, n);
    Matrix p = Matrix::Zero(n, n);
    for (int b = 0; b < blocks; ++b) {
        s.block(b * k, b * k, k, k) = fhat;
        if (b + 1 < blocks) {
            s.block(b * k, (b + 1) * k, k, k) = fhat.adjoint();
            p.block(b * k, (b + 1) * k, k, k) = Matrix::Identity(k, k);
        }
    }
    return OperatorPair::make(std::move(s), std::move(p), tol);
}

}  // namespace symbidisc
