#include "symbidisc/varieties.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

#include "symbidisc/random.hpp"

namespace symbidisc {

namespace {

bool on_unit_circle(cplx p)
{
    return std::abs(std::abs(p) - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon();
}

// Eigenvalues of e^{-i theta/2} A + e^{i theta/2} A^*, ascending.
RealVector rotated_fiber(const Matrix& a, double theta)
{
    const cplx half = std::polar(1.0, -theta / 2.0);
    const Matrix n = half * a + std::conj(half) * a.adjoint();
    return hermitian_eigenvalues(hermitian_part(n));
}

std::vector<std::pair<int, int>> graded_lex_descending(int max_degree)
{
    std::vector<std::pair<int, int>> order;
    for (int d = max_degree; d >= 0; --d) {
        for (int a = d; 2 * a >= d; --a) {
            order.emplace_back(a, d - a);
        }
    }
    return order;
}

double binomial(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

DeterminantalVariety::DeterminantalVariety(Matrix a, const Tolerances& tol) : a_(std::move(a))
{
    require_square(a_, "A");
    require_finite(a_, "A");
    nr_ = numerical_radius(a_, tol);
}

bool variety_membership(const DeterminantalVariety& v, const GammaPoint& pt,
                        const Tolerances& tol)
{
    const double cap = tol.residual_tol * (1.0 + op_norm(v.A()));
    double best = std::numeric_limits<double>::infinity();
    for (const cplx& lambda : fiber_at_p(v, pt.p)) {
        best = std::min(best, std::abs(lambda - pt.s));
    }
    return best <= cap;
}

std::vector<cplx> fiber_at_p(const DeterminantalVariety& v, cplx p)
{
    if (v.degenerate()) {
        return {cplx(0.0)};
    }
    const Matrix& a = v.A();
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(a.rows()));
    if (on_unit_circle(p)) {
        const double theta = std::arg(p);
        const cplx rot = std::polar(1.0, theta / 2.0);
        const RealVector mu = rotated_fiber(a, theta);
        for (Eigen::Index i = 0; i < mu.size(); ++i) {
            out.push_back(rot * mu(i));
        }
        return out;
    }
    const Vector ev = eigenvalues(a + p * a.adjoint());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        out.push_back(ev(i));
    }
    return out;
}

BoundarySample boundary_sample(const DeterminantalVariety& v, int m)
{
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "boundary sample count must be positive");
    }
    BoundarySample out;
    out.points.reserve(static_cast<std::size_t>(m * std::max<Eigen::Index>(v.dim(), 1)));
    for (int k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / m;
        const cplx p = std::polar(1.0, theta);
        if (v.degenerate()) {
            out.points.push_back({theta, {cplx(0.0), p}});
            continue;
        }
        const cplx rot = std::polar(1.0, theta / 2.0);
        const RealVector mu = rotated_fiber(v.A(), theta);
        for (Eigen::Index i = 0; i < mu.size(); ++i) {
            out.points.push_back({theta, {rot * mu(i), p}});
            out.max_abs_s = std::max(out.max_abs_s, std::abs(mu(i)));
        }
    }
    return out;
}

void write_boundary_csv(std::ostream& os, const BoundarySample& sample, const Tolerances& tol)
{
    os << "theta,re_s,im_s,re_p,im_p,region_tag\n";
    char line[256];
    for (const BoundaryPoint& bp : sample.points) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%s\n", bp.theta,
                      bp.pt.s.real(), bp.pt.s.imag(), bp.pt.p.real(), bp.pt.p.imag(),
                      to_string(classify_point(bp.pt, tol)));
        os << line;
    }
}

const char* to_string(DistinguishedStatus status)
{
    switch (status) {
    case DistinguishedStatus::DISTINGUISHED_CERTIFIED: return "DISTINGUISHED_CERTIFIED";
    case DistinguishedStatus::NOT_DISTINGUISHED_CERTIFIED: return "NOT_DISTINGUISHED_CERTIFIED";
    case DistinguishedStatus::DISTINGUISHED_EMPIRICAL: return "DISTINGUISHED_EMPIRICAL";
    case DistinguishedStatus::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

DistinguishedVerdict classify_distinguished(const DeterminantalVariety& v, const Tolerances& tol,
                                            int m)
{
    DistinguishedVerdict verdict;
    if (v.nr() < 1.0 - tol.psd_tol) {
        verdict.status = DistinguishedStatus::DISTINGUISHED_CERTIFIED;
        std::ostringstream os;
        os << "numerical radius " << v.nr() << " < 1";
        verdict.evidence = os.str();
        return verdict;
    }
    const Matrix& a = v.A();
    if (!v.degenerate()) {
        const Vector ev = eigenvalues(a);
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            if (std::abs(std::abs(ev(i)) - 1.0) <= tol.psd_tol) {
                verdict.status = DistinguishedStatus::NOT_DISTINGUISHED_CERTIFIED;
                verdict.evidence = "unimodular eigenvalue of A";
                verdict.witness = GammaPoint{ev(i), cplx(0.0)};
                return verdict;
            }
        }
    }

    // |p| = 1 fibers.
    const BoundarySample sample = boundary_sample(v, m);
    for (const BoundaryPoint& bp : sample.points) {
        if (!in_bgamma(classify_point(bp.pt, tol))) {
            verdict.status = DistinguishedStatus::INCONCLUSIVE;
            verdict.evidence = "unit-circle fiber point outside bGamma";
            verdict.witness = bp.pt;
            return verdict;
        }
    }

    // Exit points: one root z1 = e^{i phi}; the zero set condition is the
    // pencil (A - z1 I) + z2 (z1 A^* - I), solved for z2.
    if (!v.degenerate()) {
        const Eigen::Index n = a.rows();
        const Matrix id = Matrix::Identity(n, n);
        for (int k = 0; k < m; ++k) {
            const cplx z1 = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
            const Matrix lead = z1 * a.adjoint() - id;
            const Matrix shift = a - z1 * id;
            const Eigen::PartialPivLU<Matrix> lu(lead);
            const Vector roots = eigenvalues(-lu.solve(shift));
            for (Eigen::Index i = 0; i < roots.size(); ++i) {
                const cplx z2 = roots(i);
                if (std::isfinite(std::abs(z2)) && std::abs(z2) < 1.0 - kExitTolerance) {
                    verdict.status = DistinguishedStatus::INCONCLUSIVE;
                    verdict.evidence = "exit point with one root inside the disc";
                    verdict.witness = symmetrize_point(z1, z2);
                    return verdict;
                }
            }
        }
    }
    verdict.status = DistinguishedStatus::DISTINGUISHED_EMPIRICAL;
    std::ostringstream os;
    os << "sampled " << m << " unit-circle fibers and exit points; all in bGamma";
    verdict.evidence = os.str();
    return verdict;
}

BivarPolynomial::BivarPolynomial(Matrix coeffs) : c_(std::move(coeffs))
{
    require_finite(c_, "polynomial coefficients");
    Eigen::Index rows = c_.rows();
    Eigen::Index cols = c_.cols();
    while (rows > 0 && cols > 0 && c_.row(rows - 1).leftCols(cols).cwiseAbs().maxCoeff() == 0.0) {
        --rows;
    }
    while (cols > 0 && rows > 0 && c_.col(cols - 1).topRows(rows).cwiseAbs().maxCoeff() == 0.0) {
        --cols;
    }
    if (rows == 0 || cols == 0) {
        c_ = Matrix(0, 0);
    } else {
        c_ = c_.topLeftCorner(rows, cols).eval();
    }
}

cplx BivarPolynomial::operator()(cplx x, cplx y) const
{
    cplx acc = 0.0;
    for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) {
        cplx row = 0.0;
        for (Eigen::Index j = c_.cols() - 1; j >= 0; --j) {
            row = row * y + c_(i, j);
        }
        acc = acc * x + row;
    }
    return acc;
}

double BivarPolynomial::abs_sum(cplx x, cplx y) const
{
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    double acc = 0.0;
    for (Eigen::Index i = c_.rows() - 1; i >= 0; --i) {
        double row = 0.0;
        for (Eigen::Index j = c_.cols() - 1; j >= 0; --j) {
            row = row * ay + std::abs(c_(i, j));
        }
        acc = acc * ax + row;
    }
    return acc;
}

BivarPolynomial BivarPolynomial::swapped() const
{
    return BivarPolynomial(c_.transpose());
}

BivarPolynomial BivarPolynomial::operator*(const BivarPolynomial& other) const
{
    if (is_zero() || other.is_zero()) {
        return BivarPolynomial();
    }
    const Matrix& b = other.c_;
    Matrix out = Matrix::Zero(c_.rows() + b.rows() - 1, c_.cols() + b.cols() - 1);
    for (Eigen::Index i = 0; i < c_.rows(); ++i) {
        for (Eigen::Index j = 0; j < c_.cols(); ++j) {
            if (c_(i, j) != cplx(0.0)) {
                out.block(i, j, b.rows(), b.cols()) += c_(i, j) * b;
            }
        }
    }
    return BivarPolynomial(std::move(out));
}

double symmetric_identity_error(const BivarPolynomial& q, const BivarPolynomial& symmetric,
                                cplx z, cplx w)
{
    const cplx s = z + w;
    const cplx p = z * w;
    const double scale = std::max({q.abs_sum(s, p), symmetric.abs_sum(z, w),
                                   std::numeric_limits<double>::min()});
    return std::abs(q(s, p) - symmetric(z, w)) / scale;
}

BivarPolynomial symmetrize_bidisc_variety(const BivarPolynomial& poly)
{
    if (poly.is_zero()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial must be nonzero");
    }
    if (poly.degree_x() + poly.degree_y() > kMaxSymmetrizedDegree) {
        std::ostringstream os;
        os << "degree " << poly.degree_x() + poly.degree_y() << " exceeds cap "
           << kMaxSymmetrizedDegree;
        throw Error(ErrorKind::InvalidArgument, os.str());
    }
    const BivarPolynomial symmetric = poly * poly.swapped();
    const int deg = std::max(symmetric.degree_x(), symmetric.degree_y());
    const int total = symmetric.degree_x() + symmetric.degree_y();

    Matrix rem = Matrix::Zero(deg + 1, deg + 1);
    rem.topLeftCorner(symmetric.coeffs().rows(), symmetric.coeffs().cols()) = symmetric.coeffs();
    Matrix q = Matrix::Zero(deg + 1, deg + 1);

    for (const auto& [a, b] : graded_lex_descending(total)) {
        if (a > deg || b > deg) {
            continue;
        }
        const cplx c = rem(a, b);
        if (c == cplx(0.0)) {
            continue;
        }
        // Leading term of s^{a-b} p^b is z^a w^b.
        const int e = a - b;
        q(e, b) += c;
        for (int k = 0; k <= e; ++k) {
            rem(k + b, e - k + b) -= c * binomial(e, k);
        }
    }

    BivarPolynomial result(std::move(q));
    Rng rng(0x5eed5eedULL);
    for (int i = 0; i < 200; ++i) {
        const cplx z = rng.in_disc();
        const cplx w = rng.in_disc();
        const double err = symmetric_identity_error(result, symmetric, z, w);
        if (!(err <= 1e-10)) {
            std::ostringstream os;
            os << "symmetric rewrite mismatch " << err << " at sample " << i;
            throw Error(ErrorKind::VerificationFailed, os.str());
        }
    }
    return result;
}

}  // namespace symbidisc
