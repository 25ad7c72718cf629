#include "symbidisc/von_neumann.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace symbidisc {

MatrixPolynomial::MatrixPolynomial(Eigen::Index coeff_size) : k_(coeff_size)
{
    if (coeff_size < 1) {
        throw Error(ErrorKind::InvalidArgument, "coefficient size must be positive");
    }
    grid_.assign(1, std::vector<Matrix>(1, Matrix::Zero(k_, k_)));
}

MatrixPolynomial MatrixPolynomial::monomial(int i, int j, const Matrix& coeff)
{
    MatrixPolynomial f(coeff.rows());
    f.set(i, j, coeff);
    return f;
}

void MatrixPolynomial::set(int i, int j, const Matrix& coeff)
{
    if (i < 0 || j < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative exponent");
    }
    if (coeff.rows() != k_ || coeff.cols() != k_) {
        std::ostringstream os;
        os << "coefficient is " << coeff.rows() << "x" << coeff.cols() << ", expected " << k_
           << "x" << k_;
        throw Error(ErrorKind::ShapeMismatch, os.str());
    }
    require_finite(coeff, "coefficient");
    const std::size_t rows = std::max<std::size_t>(grid_.size(), i + 1);
    const std::size_t cols = std::max<std::size_t>(grid_[0].size(), j + 1);
    grid_.resize(rows);
    for (auto& row : grid_) {
        row.resize(cols, Matrix::Zero(k_, k_));
    }
    grid_[i][j] = coeff;
}

const Matrix& MatrixPolynomial::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i > degree_s() || j > degree_p()) {
        throw Error(ErrorKind::InvalidArgument, "exponent outside the coefficient grid");
    }
    return grid_[i][j];
}

Matrix MatrixPolynomial::at(cplx s, cplx p) const
{
    Matrix out = Matrix::Zero(k_, k_);
    cplx si(1.0, 0.0);
    for (const auto& row : grid_) {
        cplx term = si;
        for (const auto& c : row) {
            out += term * c;
            term *= p;
        }
        si *= s;
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
        }
    }
    return out;
}

Matrix evaluate_pair(const MatrixPolynomial& f, const Matrix& s, const Matrix& p)
{
    require_square(s, "S");
    require_same_shape(s, p, "P");
    const Eigen::Index n = s.rows();
    const Eigen::Index k = f.coeff_size();
    std::vector<Matrix> p_powers{Matrix::Identity(n, n)};
    for (int j = 1; j <= f.degree_p(); ++j) {
        p_powers.push_back(p_powers.back() * p);
    }
    Matrix out = Matrix::Zero(k * n, k * n);
    Matrix s_power = Matrix::Identity(n, n);
    for (int i = 0; i <= f.degree_s(); ++i) {
        if (i > 0) {
            s_power = s_power * s;
        }
        for (int j = 0; j <= f.degree_p(); ++j) {
            const Matrix& c = f.coeff(i, j);
            if (c.cwiseAbs().maxCoeff() == 0.0) {
                continue;
            }
            out += kron(c, s_power * p_powers[j]);
        }
    }
    return out;
}

Matrix evaluate_pair(const MatrixPolynomial& f, const OperatorPair& pair)
{
    return evaluate_pair(f, pair.S(), pair.P());
}

MatrixPolynomial cup_transform(const MatrixPolynomial& f)
{
    MatrixPolynomial out(f.coeff_size());
    for (int i = 0; i <= f.degree_s(); ++i) {
        for (int j = 0; j <= f.degree_p(); ++j) {
            out.set(i, j, f.coeff(i, j).adjoint());
        }
    }
    return out;
}

namespace {

// Orthonormal basis of the span of the eigenvectors of P whose eigenvalues
// sit on the unit circle; for a contraction this subspace reduces P.
Matrix unitary_part_basis(const Matrix& p, const Tolerances& tol)
{
    const Eigen::Index n = p.rows();
    Eigen::ComplexEigenSolver<Matrix> solver(p, true);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "eigen-decomposition of P failed");
    }
    std::vector<Eigen::Index> picked;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (std::abs(solver.eigenvalues()(i)) > 1.0 - tol.rank_tol) {
            picked.push_back(i);
        }
    }
    Matrix cols(n, static_cast<Eigen::Index>(picked.size()));
    for (std::size_t c = 0; c < picked.size(); ++c) {
        cols.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(picked[c]).normalized();
    }
    if (cols.cols() == 0) {
        return cols;
    }
    Eigen::BDCSVD<Matrix> svd(cols, Eigen::ComputeThinU);
    const RealVector& sv = svd.singularValues();
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > 1e-8 * sv(0)) {
        ++rank;
    }
    return svd.matrixU().leftCols(rank);
}

Matrix orthogonal_complement(const Matrix& q, Eigen::Index n)
{
    const Eigen::Index k = q.cols();
    if (k == 0) {
        return Matrix::Identity(n, n);
    }
    const HermitianEigen eig = hermitian_eig(Matrix::Identity(n, n) - q * q.adjoint());
    return eig.vectors.rightCols(n - k);
}

double block_leak(const Matrix& a, const Matrix& q, const Matrix& c)
{
    if (q.cols() == 0 || c.cols() == 0) {
        return 0.0;
    }
    return std::max(op_norm(c.adjoint() * a * q), op_norm(q.adjoint() * a * c));
}

}  // namespace

LambdaData lambda_matrix(const OperatorPair& pair, const Tolerances& tol)
{
    LambdaData out;
    const Eigen::Index n = pair.dim();
    if (n == 0) {
        out.F = Matrix(0, 0);
        return out;
    }
    if (check_pure(pair.P(), tol)) {
        out.F = solve_fundamental(pair, tol).F;
        return out;
    }

    const Matrix q = unitary_part_basis(pair.P(), tol);
    const Matrix c = orthogonal_complement(q, n);
    const double scale = 1.0 + op_norm(pair.S());
    const double leak = std::max(block_leak(pair.S(), q, c), block_leak(pair.P(), q, c));
    if (leak > tol.residual_tol * scale) {
        std::ostringstream os;
        os << "unitary part of P does not reduce the pair (leak " << leak << ")";
        throw Error(ErrorKind::InvariantViolation, os.str());
    }

    out.unitary_part = true;
    out.unitary_dim = q.cols();
    const Matrix fu = 0.5 * (q.adjoint() * pair.S() * q);
    Matrix fc(0, 0);
    if (c.cols() > 0) {
        const OperatorPair rest = OperatorPair::make(c.adjoint() * pair.S() * c,
                                                     c.adjoint() * pair.P() * c, tol);
        fc = solve_fundamental(rest, tol).F;
    }
    out.F = Matrix::Zero(fu.rows() + fc.rows(), fu.rows() + fc.rows());
    out.F.topLeftCorner(fu.rows(), fu.rows()) = fu;
    out.F.bottomRightCorner(fc.rows(), fc.rows()) = fc;
    return out;
}

DeterminantalVariety lambda_variety(const OperatorPair& pair, const Tolerances& tol)
{
    return DeterminantalVariety(lambda_matrix(pair, tol).F, tol);
}

namespace {

double value_norm(const Matrix& m)
{
    return m.size() == 1 ? std::abs(m(0, 0)) : op_norm(m);
}

// Rounding floor for ||f(S, P)||: sum of ||C_ij|| ||S||^i ||P||^j.
double evaluation_scale(const MatrixPolynomial& f, const OperatorPair& pair)
{
    const double ns = op_norm(pair.S());
    const double np = op_norm(pair.P());
    double total = 0.0;
    for (int i = 0; i <= f.degree_s(); ++i) {
        for (int j = 0; j <= f.degree_p(); ++j) {
            total += value_norm(f.coeff(i, j)) * std::pow(ns, i) * std::pow(np, j);
        }
    }
    return total;
}

}  // namespace

VNReport vn_report(const MatrixPolynomial& f, const OperatorPair& pair, int m,
                   const Tolerances& tol)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
    }
    VNReport report;
    report.lhs = value_norm(evaluate_pair(f, pair));
    const LambdaData data = lambda_matrix(pair, tol);
    report.degenerate = data.unitary_part || data.F.rows() == 0;
    const DeterminantalVariety variety(data.F, tol);
    const double floor = 1e-12 * (1.0 + evaluation_scale(f, pair));

    for (int samples = m;; samples *= 2) {
        const BoundarySample sample = boundary_sample(variety, samples);
        report.m = samples;
        report.sample_count = sample.points.size();
        report.rhs = -1.0;
        for (const BoundaryPoint& bp : sample.points) {
            const double value = value_norm(f.at(bp.pt.s, bp.pt.p));
            if (value > report.rhs) {
                report.rhs = value;
                report.argmax_theta = bp.theta;
                report.argmax = bp.pt;
            }
        }
        report.rhs = std::max(report.rhs, 0.0);
        report.holds = report.lhs <= report.rhs * (1.0 + kVNSlack) + floor;
        if (report.holds || samples >= kVNMaxSamples) {
            break;
        }
    }
    if (report.rhs > 0.0) {
        report.ratio = report.lhs / report.rhs;
    } else {
        report.ratio = report.lhs <= floor ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return report;
}

}  // namespace symbidisc
