#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "symbidisc/error.hpp"

namespace symbidisc {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical tolerances and sweep resolutions shared by every module.
struct Tolerances {
    double psd_tol = 1e-9;
    double rank_tol = 1e-10;
    double residual_tol = 1e-8;
    int grid_angular = 1024;
    int grid_radial = 21;

    /// Throws InvalidArgument on negative tolerances or grids below 2.
    void validate() const;

    /// Same tolerances with both grid resolutions doubled.
    Tolerances refined() const;
};

void require_square(const Matrix& a, const char* what);
void require_finite(const Matrix& a, const char* what);
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

/// Largest singular value; 0 for an empty matrix.
double op_norm(const Matrix& a);
RealVector singular_values(const Matrix& a);

Matrix hermitian_part(const Matrix& a);

struct HermitianEigen {
    RealVector values;  // ascending
    Matrix vectors;
};

HermitianEigen hermitian_eig(const Matrix& h);
RealVector hermitian_eigenvalues(const Matrix& h);
double lambda_min(const Matrix& h);
double lambda_max(const Matrix& h);

/// PSD acceptance: lambda_min(H) >= -psd_tol * (1 + ||H||).
bool is_psd(const Matrix& h, const Tolerances& tol);

/// Eigenvalues of a general complex square matrix.
Vector eigenvalues(const Matrix& a);
double spectral_radius(const Matrix& a);

Matrix matrix_power(const Matrix& a, int k);
double commutator_norm(const Matrix& a, const Matrix& b);

/// Square root of a Hermitian PSD matrix; negative eigenvalues are clamped.
Matrix psd_sqrt(const Matrix& h);

/// Principal square root through the complex Schur form.
///
/// Eigenvalues below rank_tol * (1 + ||M||) in modulus are treated as zero.
/// Throws NoSquareRoot when a zero eigenvalue sits in a block that no
/// upper-triangular root can reproduce (e.g. a nonzero nilpotent), or when
/// the result fails ||R^2 - M|| <= residual_tol * (1 + ||M||).
Matrix principal_sqrt(const Matrix& m, const Tolerances& tol);

/// Golden-section search for a maximum of f on [a, b], stopping once the
/// bracket is narrower than width_tol. Returns (argmax, max).
std::pair<double, double> golden_section_max(const std::function<double(double)>& f,
                                             double a, double b, double width_tol);

/// lambda_max of the Hermitian part of e^{i theta} A.
double rotated_hermitian_max(const Matrix& a, double theta);

/// omega(A) = max over theta of lambda_max((e^{i theta} A + e^{-i theta} A^*) / 2).
///
/// Angular grid of tol.grid_angular points, then golden-section refinement
/// of the best grid brackets to width 1e-10.
double numerical_radius(const Matrix& a, const Tolerances& tol = {});

struct JointEigenvalue {
    cplx s;
    cplx p;
};

/// Joint eigenvalues of a commuting pair via one unitary basis that makes
/// both matrices upper triangular. The Schur basis of S is tried first, then
/// that of S + eps P for eps in {1e-8, 1e-6}.
std::vector<JointEigenvalue> joint_spectrum(const Matrix& s, const Matrix& p,
                                            const Tolerances& tol = {});

}  // namespace symbidisc
