#include "symbidisc/gamma_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace symbidisc {

namespace {

// Products reused by every pencil evaluation.
struct PencilTerms {
    Matrix s;
    Matrix psp;   // P^*P
    Matrix ssp;   // S^*P
    Eigen::Index n = 0;

    explicit PencilTerms(const OperatorPair& pair)
        : s(pair.S()),
          psp(pair.P().adjoint() * pair.P()),
          ssp(pair.S().adjoint() * pair.P()),
          n(pair.dim())
    {
    }

    Matrix at(cplx alpha) const
    {
        const double r2 = std::norm(alpha);
        const Matrix x = alpha * s - (r2 * alpha) * ssp;
        Matrix rho = 2.0 * Matrix::Identity(n, n) - (2.0 * r2 * r2) * psp - x - x.adjoint();
        return hermitian_part(rho);
    }

    double min_eig(double r, double theta) const
    {
        return lambda_min(at(std::polar(r, theta)));
    }
};

struct GridMin {
    double value = std::numeric_limits<double>::infinity();
    double r = 0.0;
    double theta = 0.0;
    double max_norm = 0.0;
};

GridMin sweep(const PencilTerms& terms, const Tolerances& tol)
{
    GridMin best;
    const int nr = tol.grid_radial;
    const int na = tol.grid_angular;
    for (int j = 0; j < nr; ++j) {
        const double r = static_cast<double>(j) / (nr - 1);
        const int count = j == 0 ? 1 : na;
        for (int k = 0; k < count; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / na;
            const RealVector ev = hermitian_eigenvalues(terms.at(std::polar(r, theta)));
            const double lo = ev(0);
            const double hi = ev(ev.size() - 1);
            best.max_norm = std::max({best.max_norm, std::abs(lo), std::abs(hi)});
            if (lo < best.value) {
                best.value = lo;
                best.r = r;
                best.theta = theta;
            }
        }
    }
    return best;
}

void require_commuting(const OperatorPair& pair, const Tolerances& tol)
{
    const double cap = tol.residual_tol * (1.0 + op_norm(pair.S()) * op_norm(pair.P()));
    if (pair.commutator_defect() > cap) {
        throw Error(ErrorKind::NonCommuting, "pair does not commute within tolerance");
    }
}

}  // namespace

OperatorPair OperatorPair::make(Matrix s, Matrix p, const Tolerances& tol)
{
    require_square(s, "S");
    require_square(p, "P");
    require_same_shape(s, p, "operator pair");
    require_finite(s, "S");
    require_finite(p, "P");
    const double defect = commutator_norm(s, p);
    const double cap = tol.residual_tol * (1.0 + op_norm(s) * op_norm(p));
    if (!(defect <= cap)) {
        std::ostringstream os;
        os << "||SP - PS|| = " << defect << " exceeds " << cap;
        throw Error(ErrorKind::NonCommuting, os.str());
    }
    return OperatorPair(std::move(s), std::move(p), defect);
}

OperatorPair OperatorPair::adjoint() const
{
    return OperatorPair(s_.adjoint(), p_.adjoint(), defect_);
}

OperatorPair OperatorPair::scaled(double r) const
{
    return OperatorPair(r * s_, (r * r) * p_, r * r * r * defect_);
}

Matrix rho_pencil(const Matrix& s, const Matrix& p)
{
    require_square(s, "S");
    require_same_shape(s, p, "rho_pencil");
    const Eigen::Index n = s.rows();
    const Matrix g = s - s.adjoint() * p;
    Matrix rho = 2.0 * (Matrix::Identity(n, n) - p.adjoint() * p) - g - g.adjoint();
    return hermitian_part(rho);
}

Matrix rho_pencil(const OperatorPair& pair)
{
    return rho_pencil(pair.S(), pair.P());
}

Matrix rho_at(const OperatorPair& pair, cplx alpha)
{
    return PencilTerms(pair).at(alpha);
}

PairVerdict check_gamma_contraction(const OperatorPair& pair, const Tolerances& tol)
{
    tol.validate();
    require_commuting(pair, tol);
    PairVerdict verdict;
    if (pair.dim() == 0) {
        verdict.is_member = true;
        return verdict;
    }
    const PencilTerms terms(pair);
    const GridMin best = sweep(terms, tol);
    verdict.margin = best.value;
    verdict.is_member = best.value >= -tol.psd_tol * (1.0 + best.max_norm);
    const cplx alpha = std::polar(best.r, best.theta);
    const HermitianEigen eig = hermitian_eig(terms.at(alpha));
    verdict.witness = PencilWitness{alpha, eig.vectors.col(0)};
    return verdict;
}

double strictness_constant(const OperatorPair& pair, const Tolerances& tol)
{
    tol.validate();
    require_commuting(pair, tol);
    if (pair.dim() == 0) {
        return 2.0;
    }
    const PencilTerms terms(pair);
    const GridMin grid = sweep(terms, tol);
    double best = grid.value;
    double r = grid.r;
    double theta = grid.theta;
    const double dr = 1.0 / (tol.grid_radial - 1);
    const double dtheta = 2.0 * std::numbers::pi / tol.grid_angular;

    for (int round = 0; round < 40; ++round) {
        const double before = best;
        if (r > 0.0) {
            const auto [t, v] = golden_section_max(
                [&](double th) { return -terms.min_eig(r, th); }, theta - dtheta,
                theta + dtheta, 1e-11);
            if (-v < best) {
                best = -v;
                theta = t;
            }
        }
        const double lo = std::max(0.0, r - dr);
        const double hi = std::min(1.0, r + dr);
        const auto [rr, v] = golden_section_max(
            [&](double x) { return -terms.min_eig(x, theta); }, lo, hi, 1e-11);
        if (-v < best) {
            best = -v;
            r = rr;
        }
        if (hi == 1.0) {
            const double edge = terms.min_eig(1.0, theta);
            if (edge < best) {
                best = edge;
                r = 1.0;
            }
        }
        if (before - best <= 1e-15) {
            break;
        }
    }
    return best;
}

PairVerdict check_gamma_isometry(const OperatorPair& pair, const Tolerances& tol)
{
    require_commuting(pair, tol);
    const Matrix& s = pair.S();
    const Matrix& p = pair.P();
    const Eigen::Index n = pair.dim();
    PairVerdict verdict;
    if (n == 0) {
        verdict.is_member = true;
        return verdict;
    }
    const double isometry_defect = op_norm(p.adjoint() * p - Matrix::Identity(n, n));
    const double symmetry_defect = op_norm(s - s.adjoint() * p);
    const double radius_excess = std::max(0.0, spectral_radius(s) - 2.0);
    verdict.margin = -std::max({isometry_defect, symmetry_defect, radius_excess});
    verdict.is_member = isometry_defect <= tol.residual_tol &&
                        symmetry_defect <= tol.residual_tol &&
                        radius_excess <= tol.psd_tol;
    if (verdict.is_member) {
        try {
            for (const JointEigenvalue& je : joint_spectrum(s, p, tol)) {
                if (!in_bgamma(classify_point({je.s, je.p}, tol))) {
                    verdict.is_member = false;
                    break;
                }
            }
        } catch (const Error&) {
            verdict.is_member = false;
        }
    }
    return verdict;
}

bool check_pure(const Matrix& p, const Tolerances& tol)
{
    require_square(p, "P");
    require_finite(p, "P");
    if (p.size() == 0) {
        return true;
    }
    const double norm = op_norm(p);
    if (norm > 1.0 + tol.psd_tol) {
        std::ostringstream os;
        os << "||P|| = " << norm;
        throw Error(ErrorKind::NotContraction, os.str());
    }
    if (spectral_radius(p) <= 1.0 - tol.rank_tol) {
        return true;
    }
    Matrix power = p;
    for (int n = 1; n <= 512; n *= 2) {
        if (op_norm(power) <= 1e-8) {
            return true;
        }
        power = power * power;
    }
    return false;
}

OperatorPair symmetrize_pair(const Matrix& t1, const Matrix& t2, const Tolerances& tol)
{
    require_square(t1, "T1");
    require_same_shape(t1, t2, "symmetrize_pair");
    require_finite(t1, "T1");
    require_finite(t2, "T2");
    const double n1 = op_norm(t1);
    const double n2 = op_norm(t2);
    if (n1 > 1.0 + tol.psd_tol || n2 > 1.0 + tol.psd_tol) {
        std::ostringstream os;
        os << "||T1|| = " << n1 << ", ||T2|| = " << n2;
        throw Error(ErrorKind::NotContraction, os.str());
    }
    if (commutator_norm(t1, t2) > tol.residual_tol * (1.0 + n1 * n2)) {
        throw Error(ErrorKind::NonCommuting, "T1 and T2 do not commute");
    }
    return OperatorPair::make(t1 + t2, t1 * t2, tol);
}

std::pair<Matrix, Matrix> desymmetrize_pair(const OperatorPair& pair, const Tolerances& tol)
{
    require_commuting(pair, tol);
    const Matrix& s = pair.S();
    const Matrix& p = pair.P();
    const Matrix root = principal_sqrt(s * s - 4.0 * p, tol);
    const double scale = 1.0 + op_norm(s) * op_norm(s) + op_norm(p);
    const double cap = tol.residual_tol * scale;
    if (commutator_norm(root, s) > cap || commutator_norm(root, p) > cap) {
        throw Error(ErrorKind::NonCommutingRoot,
                    "principal square root of S^2 - 4P does not commute with the pair");
    }
    Matrix t1 = 0.5 * (s + root);
    Matrix t2 = 0.5 * (s - root);
    if (op_norm(t1 + t2 - s) > cap || op_norm(t1 * t2 - p) > cap) {
        throw Error(ErrorKind::VerificationFailed, "desymmetrized pair does not reproduce (S, P)");
    }
    return {std::move(t1), std::move(t2)};
}

}  // namespace symbidisc
