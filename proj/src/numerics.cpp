#include "symbidisc/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

namespace symbidisc {

namespace {

std::string shape_of(const Matrix& a)
{
    std::ostringstream os;
    os << a.rows() << "x" << a.cols();
    return os.str();
}

double strictly_lower_norm(const Matrix& t)
{
    double acc = 0.0;
    for (Eigen::Index j = 0; j < t.cols(); ++j) {
        for (Eigen::Index i = j + 1; i < t.rows(); ++i) {
            acc += std::norm(t(i, j));
        }
    }
    return std::sqrt(acc);
}

}  // namespace

void Tolerances::validate() const
{
    if (!(psd_tol >= 0.0) || !(rank_tol >= 0.0) || !(residual_tol >= 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerances must be nonnegative");
    }
    if (grid_angular < 2 || grid_radial < 2) {
        throw Error(ErrorKind::InvalidArgument, "grid sizes must be at least 2");
    }
}

Tolerances Tolerances::refined() const
{
    Tolerances t = *this;
    t.grid_angular *= 2;
    t.grid_radial = 2 * grid_radial - 1;  // keeps every previous radius
    return t;
}

void require_square(const Matrix& a, const char* what)
{
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NonSquare, std::string(what) + " is " + shape_of(a));
    }
}

void require_finite(const Matrix& a, const char* what)
{
    if (!a.allFinite()) {
        throw Error(ErrorKind::NonFinite, std::string(what) + " has non-finite entries");
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::ShapeMismatch,
                    std::string(what) + ": " + shape_of(a) + " vs " + shape_of(b));
    }
}

RealVector singular_values(const Matrix& a)
{
    if (a.size() == 0) {
        return RealVector();
    }
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues();
}

double op_norm(const Matrix& a)
{
    if (a.size() == 0) {
        return 0.0;
    }
    return singular_values(a)(0);
}

Matrix hermitian_part(const Matrix& a)
{
    return 0.5 * (a + a.adjoint());
}

HermitianEigen hermitian_eig(const Matrix& h)
{
    if (h.size() == 0) {
        return {RealVector(), Matrix()};
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    return {es.eigenvalues(), es.eigenvectors()};
}

RealVector hermitian_eigenvalues(const Matrix& h)
{
    if (h.size() == 0) {
        return RealVector();
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
}

double lambda_min(const Matrix& h)
{
    const RealVector ev = hermitian_eigenvalues(h);
    return ev.size() == 0 ? 0.0 : ev(0);
}

double lambda_max(const Matrix& h)
{
    const RealVector ev = hermitian_eigenvalues(h);
    return ev.size() == 0 ? 0.0 : ev(ev.size() - 1);
}

bool is_psd(const Matrix& h, const Tolerances& tol)
{
    const RealVector ev = hermitian_eigenvalues(h);
    if (ev.size() == 0) {
        return true;
    }
    const double norm = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    return ev(0) >= -tol.psd_tol * (1.0 + norm);
}

Vector eigenvalues(const Matrix& a)
{
    require_square(a, "eigenvalues input");
    if (a.size() == 0) {
        return Vector();
    }
    Eigen::ComplexEigenSolver<Matrix> es(a, false);
    if (es.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "complex eigensolver did not converge");
    }
    return es.eigenvalues();
}

double spectral_radius(const Matrix& a)
{
    const Vector ev = eigenvalues(a);
    return ev.size() == 0 ? 0.0 : ev.cwiseAbs().maxCoeff();
}

Matrix matrix_power(const Matrix& a, int k)
{
    require_square(a, "matrix_power input");
    Matrix result = Matrix::Identity(a.rows(), a.cols());
    for (int i = 0; i < k; ++i) {
        result = result * a;
    }
    return result;
}

double commutator_norm(const Matrix& a, const Matrix& b)
{
    return op_norm(a * b - b * a);
}

Matrix psd_sqrt(const Matrix& h)
{
    const HermitianEigen eig = hermitian_eig(h);
    const RealVector roots = eig.values.cwiseMax(0.0).cwiseSqrt();
    return eig.vectors * roots.cast<cplx>().asDiagonal() * eig.vectors.adjoint();
}

Matrix principal_sqrt(const Matrix& m, const Tolerances& tol)
{
    require_square(m, "principal_sqrt input");
    require_finite(m, "principal_sqrt input");
    const Eigen::Index n = m.rows();
    if (n == 0) {
        return Matrix();
    }
    const double scale = 1.0 + op_norm(m);
    const double zero_eig = tol.rank_tol * scale;
    const double zero_sum = 1e-12 * (1.0 + std::sqrt(scale));
    const double residual_cap = tol.residual_tol * scale;

    Eigen::ComplexSchur<Matrix> schur(m);
    if (schur.info() != Eigen::Success) {
        throw Error(ErrorKind::NoConvergence, "Schur decomposition did not converge");
    }
    const Matrix& t = schur.matrixT();
    const Matrix& u = schur.matrixU();

    Matrix r = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        cplx d = t(i, i);
        if (std::abs(d) <= zero_eig) {
            r(i, i) = 0.0;
            continue;
        }
        // Pin eigenvalues on the negative axis to the upper side of the cut,
        // so equal eigenvalues always get equal roots.
        if (d.real() < 0.0 && std::abs(d.imag()) <= 1e-14 * scale) {
            d = cplx(d.real(), 0.0);
        }
        r(i, i) = std::sqrt(d);
    }
    for (Eigen::Index j = 1; j < n; ++j) {
        for (Eigen::Index i = j - 1; i >= 0; --i) {
            cplx acc = t(i, j);
            for (Eigen::Index k = i + 1; k < j; ++k) {
                acc -= r(i, k) * r(k, j);
            }
            const cplx denom = r(i, i) + r(j, j);
            if (std::abs(denom) <= zero_sum) {
                if (std::abs(acc) > residual_cap) {
                    throw Error(ErrorKind::NoSquareRoot,
                                "zero eigenvalue in a block with no triangular square root");
                }
                r(i, j) = 0.0;
            } else {
                r(i, j) = acc / denom;
            }
        }
    }
    Matrix root = u * r * u.adjoint();
    const double residual = op_norm(root * root - m);
    if (!(residual <= residual_cap)) {
        std::ostringstream os;
        os << "principal root residual " << residual << " exceeds " << residual_cap;
        throw Error(ErrorKind::NoSquareRoot, os.str());
    }
    return root;
}

std::pair<double, double> golden_section_max(const std::function<double(double)>& f,
                                             double a, double b, double width_tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > width_tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

double rotated_hermitian_max(const Matrix& a, double theta)
{
    const cplx phase = std::polar(1.0, theta);
    return lambda_max(hermitian_part(phase * a));
}

double numerical_radius(const Matrix& a, const Tolerances& tol)
{
    require_square(a, "numerical_radius input");
    require_finite(a, "numerical_radius input");
    if (a.size() == 0) {
        return 0.0;
    }
    const int m = std::max(tol.grid_angular, 2);
    const double step = 2.0 * std::numbers::pi / m;
    std::vector<double> values(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        values[static_cast<std::size_t>(k)] = rotated_hermitian_max(a, step * k);
    }
    double best = *std::max_element(values.begin(), values.end());

    // Local maxima of the cyclic grid, best first; refine the top few.
    std::vector<int> peaks;
    for (int k = 0; k < m; ++k) {
        const double v = values[static_cast<std::size_t>(k)];
        const double left = values[static_cast<std::size_t>((k + m - 1) % m)];
        const double right = values[static_cast<std::size_t>((k + 1) % m)];
        if (v >= left && v >= right) {
            peaks.push_back(k);
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](int x, int y) {
        return values[static_cast<std::size_t>(x)] > values[static_cast<std::size_t>(y)];
    });
    const std::size_t refine_count = std::min<std::size_t>(peaks.size(), 3);
    for (std::size_t i = 0; i < refine_count; ++i) {
        const double centre = step * peaks[i];
        const auto [arg, val] = golden_section_max(
            [&](double th) { return rotated_hermitian_max(a, th); }, centre - step,
            centre + step, 1e-10);
        (void)arg;
        best = std::max(best, val);
    }
    return std::max(best, 0.0);
}

std::vector<JointEigenvalue> joint_spectrum(const Matrix& s, const Matrix& p,
                                            const Tolerances& tol)
{
    require_square(s, "S");
    require_square(p, "P");
    require_same_shape(s, p, "joint_spectrum");
    require_finite(s, "S");
    require_finite(p, "P");
    const double norm_s = op_norm(s);
    const double norm_p = op_norm(p);
    const double defect = commutator_norm(s, p);
    if (defect > tol.residual_tol * (1.0 + norm_s * norm_p)) {
        std::ostringstream os;
        os << "commutator norm " << defect;
        throw Error(ErrorKind::NonCommuting, os.str());
    }
    const Eigen::Index n = s.rows();
    if (n == 0) {
        return {};
    }

    auto try_basis = [&](const Matrix& generator, bool check_s)
        -> std::optional<std::vector<JointEigenvalue>> {
        Eigen::ComplexSchur<Matrix> schur(generator);
        if (schur.info() != Eigen::Success) {
            return std::nullopt;
        }
        const Matrix& u = schur.matrixU();
        const Matrix ts = u.adjoint() * s * u;
        const Matrix tp = u.adjoint() * p * u;
        if (strictly_lower_norm(tp) > tol.residual_tol * (1.0 + norm_p)) {
            return std::nullopt;
        }
        if (check_s && strictly_lower_norm(ts) > tol.residual_tol * (1.0 + norm_s)) {
            return std::nullopt;
        }
        std::vector<JointEigenvalue> out(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = {ts(i, i), tp(i, i)};
        }
        return out;
    };

    if (auto out = try_basis(s, false)) {
        return *out;
    }
    for (double eps : {1e-8, 1e-6}) {
        if (auto out = try_basis(s + eps * p, true)) {
            return *out;
        }
    }
    throw Error(ErrorKind::TriangularizationFailed,
                "no common triangularizing basis found for the pair");
}

}  // namespace symbidisc
