#include "symbidisc/model_theory.hpp"

#include <sstream>

namespace symbidisc {

namespace {

// diag(sqrt(lambda)) basis^*, the defect operator in its own range coordinates.
Matrix compressed_defect(const DefectData& d)
{
    const RealVector roots = d.eigenvalues.tail(d.rank).cwiseSqrt();
    return roots.cast<cplx>().asDiagonal() * d.basis.adjoint();
}

}  // namespace

CharFnCoeffs characteristic_coeffs(const Matrix& p, int n_terms, const Tolerances& tol)
{
    if (n_terms < 1) {
        throw Error(ErrorKind::InvalidArgument, "term count must be positive");
    }
    const DefectData dp = defect_operator(p, tol);
    const DefectData dps = defect_operator(p.adjoint(), tol);
    CharFnCoeffs out;
    out.source = p;
    out.basis_p = dp.basis;
    out.basis_pstar = dps.basis;
    out.theta.push_back(-(dps.basis.adjoint() * p * dp.basis));
    // D_P restricted to its range, written as n x rank(P).
    Matrix right = compressed_defect(dp).adjoint();
    const Matrix left = compressed_defect(dps);
    for (int k = 1; k < n_terms; ++k) {
        out.theta.push_back(left * right);
        right = p.adjoint() * right;
    }
    return out;
}

TruncatedModel build_model(const OperatorPair& pair, int n_blocks, const Tolerances& tol)
{
    if (n_blocks < 1) {
        throw Error(ErrorKind::InvalidArgument, "block count must be positive");
    }
    if (!check_pure(pair.P(), tol)) {
        throw Error(ErrorKind::NotPure, "P is not pure; the Hardy-space model needs (P^*)^n -> 0");
    }
    const Eigen::Index n = pair.dim();
    const Matrix pstar = pair.P().adjoint();

    int blocks = n_blocks;
    double tail = op_norm(matrix_power(pstar, blocks));
    while (tail > kModelTail) {
        if (blocks >= kMaxModelBlocks) {
            std::ostringstream os;
            os << "||(P^*)^N|| = " << tail << " at N = " << blocks;
            throw Error(ErrorKind::NoConvergence, os.str());
        }
        blocks = std::min(2 * blocks, kMaxModelBlocks);
        tail = op_norm(matrix_power(pstar, blocks));
    }

    const FundamentalOperator fs = solve_fundamental(pair.adjoint(), tol);
    const DefectData dps = defect_operator(pstar, tol);
    const Eigen::Index r = dps.rank;

    TruncatedModel model;
    model.N = blocks;
    model.block = r;
    model.Fstar = fs.F;
    model.tail = tail;
    const Eigen::Index dim = r * blocks;
    model.T = Matrix::Zero(dim, dim);
    model.V = Matrix::Zero(dim, dim);
    model.W = Matrix::Zero(dim, n);
    // fs.basis and dps.basis come from the same eigen-decomposition of I - PP^*.
    const Matrix fadj = fs.F.adjoint();
    Matrix row = compressed_defect(dps);
    for (int b = 0; b < blocks; ++b) {
        model.T.block(b * r, b * r, r, r) = fadj;
        if (b + 1 < blocks) {
            model.T.block((b + 1) * r, b * r, r, r) = fs.F;
            model.V.block((b + 1) * r, b * r, r, r) = Matrix::Identity(r, r);
        }
        model.W.middleRows(b * r, r) = row;
        row = row * pstar;
    }
    return model;
}

DilationReport dilation_check(const TruncatedModel& model, const OperatorPair& pair, int m_max,
                              int n_max)
{
    if (m_max < 0 || n_max < 0) {
        throw Error(ErrorKind::InvalidArgument, "power bounds must be nonnegative");
    }
    if (model.W.cols() != pair.dim()) {
        std::ostringstream os;
        os << "model embeds dimension " << model.W.cols() << ", pair has " << pair.dim();
        throw Error(ErrorKind::ShapeMismatch, os.str());
    }
    const Matrix& w = model.W;
    const Matrix& s = pair.S();
    const Matrix& p = pair.P();
    DilationReport out;
    out.tail = model.tail;
    out.constant = (1.0 + op_norm(s)) * (1.0 + m_max + n_max);

    Matrix vw = w;  // V^n W
    Matrix pn = Matrix::Identity(pair.dim(), pair.dim());
    for (int nn = 0; nn <= n_max; ++nn) {
        Matrix tvw = vw;  // T^m V^n W
        Matrix smpn = pn;  // S^m P^n
        for (int mm = 0; mm <= m_max; ++mm) {
            out.residual = std::max(out.residual, op_norm(w.adjoint() * tvw - smpn));
            if (mm < m_max) {
                tvw = model.T * tvw;
                smpn = s * smpn;
            }
        }
        if (nn < n_max) {
            vw = model.V * vw;
            pn = pn * p;
        }
    }
    out.shift_intertwine = op_norm(w * p.adjoint() - model.V.adjoint() * w);
    out.s_intertwine = op_norm(w * s.adjoint() - model.T.adjoint() * w);
    return out;
}

}  // namespace symbidisc
