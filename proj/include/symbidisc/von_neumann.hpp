#pragma once

#include <vector>

#include "symbidisc/fundamental.hpp"
#include "symbidisc/gamma_pairs.hpp"
#include "symbidisc/varieties.hpp"

namespace symbidisc {

/// f(s, p) = sum C[i][j] s^i p^j with k x k coefficients.
class MatrixPolynomial {
public:
    explicit MatrixPolynomial(Eigen::Index coeff_size = 1);

    /// A single term coeff * s^i p^j.
    static MatrixPolynomial monomial(int i, int j, const Matrix& coeff);

    /// Sets C[i][j], growing the grid as needed.
    void set(int i, int j, const Matrix& coeff);
    const Matrix& coeff(int i, int j) const;

    Eigen::Index coeff_size() const noexcept { return k_; }
    int degree_s() const noexcept { return static_cast<int>(grid_.size()) - 1; }
    int degree_p() const noexcept { return grid_.empty() ? -1 : static_cast<int>(grid_[0].size()) - 1; }

    /// f(s, p) with scalar arguments.
    Matrix at(cplx s, cplx p) const;

private:
    Eigen::Index k_;
    std::vector<std::vector<Matrix>> grid_;
};

/// Kronecker product a (x) b, with block (r, c) equal to a(r, c) b.
Matrix kron(const Matrix& a, const Matrix& b);

/// sum C[i][j] (x) S^i P^j on (coefficient space) (x) (state space).
Matrix evaluate_pair(const MatrixPolynomial& f, const Matrix& s, const Matrix& p);
Matrix evaluate_pair(const MatrixPolynomial& f, const OperatorPair& pair);

/// Coefficient-wise adjoint, so that f^cup(A, B) = f(A^*, B^*)^* for commuting A, B.
MatrixPolynomial cup_transform(const MatrixPolynomial& f);

/// Matrix behind the variety attached to a Gamma-contraction, with the
/// route that produced it.
struct LambdaData {
    Matrix F;
    /// true when P has a unitary part; F is then S_u/2 on that part (the
    /// limit of the fundamental operators of (rS, r^2P) as r -> 1) joined
    /// with the fundamental operator of the pure remainder.
    bool unitary_part = false;
    Eigen::Index unitary_dim = 0;
};

LambdaData lambda_matrix(const OperatorPair& pair, const Tolerances& tol = {});

/// {(s, p) : det(F + p F^* - s I) = 0}, the determinantal variety with A = F.
///
/// This orientation is the one that contains the joint spectrum: for a
/// scalar pair, F + p conj(F) = s follows from s - conj(s) p = (1 - |p|^2) F.
DeterminantalVariety lambda_variety(const OperatorPair& pair, const Tolerances& tol = {});

struct VNReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    std::size_t sample_count = 0;
    bool holds = false;
    int m = 0;
    double argmax_theta = 0.0;
    GammaPoint argmax{};
    bool degenerate = false;
};

/// Relative slack on the sampled maximum.
inline constexpr double kVNSlack = 1e-6;
/// Largest boundary sample count tried before reporting a violation.
inline constexpr int kVNMaxSamples = 1 << 16;

/// ||f(S, P)|| against the maximum of ||f(s, p)|| over boundary samples of
/// the variety on |p| = 1. m doubles up to kVNMaxSamples while the
/// inequality fails.
VNReport vn_report(const MatrixPolynomial& f, const OperatorPair& pair, int m,
                   const Tolerances& tol = {});

}  // namespace symbidisc
