#include "symbidisc/random.hpp"

#include <cmath>
#include <numbers>

namespace symbidisc {

double Rng::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal()
{
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    do {
        u = uniform();
    } while (u <= 0.0);
    const double v = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u));
    const double angle = 2.0 * std::numbers::pi * v;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

cplx Rng::complex_normal()
{
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

cplx Rng::unit_complex()
{
    return std::polar(1.0, 2.0 * std::numbers::pi * uniform());
}

cplx Rng::in_disc(double radius)
{
    const double r = radius * std::sqrt(uniform());
    return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

int Rng::integer(int lo, int hi)
{
    if (hi < lo) {
        throw Error(ErrorKind::InvalidArgument, "empty integer range");
    }
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Matrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols)
{
    Matrix out(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            out(r, c) = rng.complex_normal();
        }
    }
    return out;
}

Matrix random_unitary(Rng& rng, Eigen::Index n)
{
    const Matrix g = random_gaussian(rng, n, n);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index i = 0; i < n; ++i) {
        const double mag = std::abs(r(i, i));
        if (mag > 0.0) {
            q.col(i) *= r(i, i) / mag;
        }
    }
    return q;
}

namespace {

Matrix rescale_to_norm(const Matrix& a, double target)
{
    const double norm = op_norm(a);
    return norm > 0.0 ? Matrix(a * (target / norm)) : a;
}

}  // namespace

std::pair<Matrix, Matrix> random_commuting_contractions(Rng& rng, Eigen::Index n, bool nilpotent)
{
    Matrix t = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        t(i, i) = nilpotent ? cplx(0.0) : rng.in_disc();
        for (Eigen::Index j = i + 1; j < n; ++j) {
            t(i, j) = 0.5 * rng.complex_normal();
        }
    }
    const Matrix id = Matrix::Identity(n, n);
    const Matrix t2 = t * t;
    auto poly = [&]() {
        // Draws are sequenced one per statement so the stream order is fixed.
        const cplx c0 = nilpotent ? cplx(0.0) : rng.in_disc(0.5);
        const cplx c1 = rng.complex_normal();
        Matrix out = c0 * id + c1 * t;
        if (rng.uniform() < 0.5) {
            const cplx c2 = rng.complex_normal();
            out += 0.5 * c2 * t2;
        }
        return out;
    };
    const Matrix a = poly();
    const Matrix b = poly();
    const Matrix u = random_unitary(rng, n);
    const Matrix t1 = rescale_to_norm(u * a * u.adjoint(), rng.uniform(0.5, 1.0));
    const Matrix t2b = rescale_to_norm(u * b * u.adjoint(), rng.uniform(0.5, 1.0));
    return {t1, t2b};
}

OperatorPair random_symmetrized_pair(Rng& rng, Eigen::Index n, const Tolerances& tol)
{
    const auto [t1, t2] = random_commuting_contractions(rng, n);
    return symmetrize_pair(t1, t2, tol);
}

Matrix random_with_numerical_radius(Rng& rng, Eigen::Index k, double target,
                                    const Tolerances& tol)
{
    const Matrix a = random_gaussian(rng, k, k);
    const double w = numerical_radius(a, tol);
    return w > 0.0 ? Matrix(a * (target / w)) : a;
}

OperatorPair random_converse_pair(Rng& rng, Eigen::Index k, int blocks, double radius,
                                  const Tolerances& tol)
{
    return truncated_model_from_F(random_with_numerical_radius(rng, k, radius, tol), blocks, tol);
}

OperatorPair random_strict_pair(Rng& rng, Eigen::Index n, double r, const Tolerances& tol)
{
    return random_symmetrized_pair(rng, n, tol).scaled(r);
}

OperatorPair random_pure_pair(Rng& rng, Eigen::Index n, double max_radius, bool nilpotent,
                              const Tolerances& tol)
{
    const auto [t1, t2] = random_commuting_contractions(rng, n, nilpotent);
    OperatorPair pair = symmetrize_pair(t1, t2, tol);
    const double rp = spectral_radius(pair.P());
    if (!nilpotent && rp > max_radius) {
        pair = pair.scaled(std::sqrt(max_radius / rp));
    }
    return pair;
}

OperatorPair random_unitary_sum(Rng& rng, Eigen::Index unitary_dim, Eigen::Index rest_dim,
                                const Tolerances& tol)
{
    const Eigen::Index n = unitary_dim + rest_dim;
    Matrix s = Matrix::Zero(n, n);
    Matrix p = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < unitary_dim; ++i) {
        const cplx z1 = rng.unit_complex();
        const cplx z2 = rng.unit_complex();
        s(i, i) = z1 + z2;
        p(i, i) = z1 * z2;
    }
    if (rest_dim > 0) {
        const OperatorPair rest = random_symmetrized_pair(rng, rest_dim, tol);
        s.bottomRightCorner(rest_dim, rest_dim) = rest.S();
        p.bottomRightCorner(rest_dim, rest_dim) = rest.P();
    }
    const Matrix u = random_unitary(rng, n);
    return OperatorPair::make(u * s * u.adjoint(), u * p * u.adjoint(), tol);
}

Matrix random_planted_unimodular(Rng& rng, Eigen::Index k, const Tolerances& tol)
{
    Matrix a = Matrix::Zero(k, k);
    a(0, 0) = rng.unit_complex();
    if (k > 1) {
        a.bottomRightCorner(k - 1, k - 1) =
            random_with_numerical_radius(rng, k - 1, rng.uniform(0.3, 1.0), tol);
    }
    const Matrix u = random_unitary(rng, k);
    return u * a * u.adjoint();
}

MatrixPolynomial random_matrix_polynomial(Rng& rng, Eigen::Index k, int degree)
{
    MatrixPolynomial f(k);
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            if (rng.uniform() < 0.6) {
                f.set(i, j, random_gaussian(rng, k, k));
            }
        }
    }
    return f;
}

}  // namespace symbidisc
