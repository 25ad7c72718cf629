#pragma once

#include <optional>
#include <utility>

#include "symbidisc/geometry.hpp"
#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// A commuting pair (S, P) of equal-size square matrices.
///
/// Construction checks ||SP - PS|| <= residual_tol (1 + ||S|| ||P||) and
/// caches the defect.
class OperatorPair {
public:
    static OperatorPair make(Matrix s, Matrix p, const Tolerances& tol = {});

    const Matrix& S() const noexcept { return s_; }
    const Matrix& P() const noexcept { return p_; }
    double commutator_defect() const noexcept { return defect_; }
    Eigen::Index dim() const noexcept { return s_.rows(); }

    /// (S^*, P^*).
    OperatorPair adjoint() const;
    /// (r S, r^2 P).
    OperatorPair scaled(double r) const;

private:
    OperatorPair(Matrix s, Matrix p, double defect)
        : s_(std::move(s)), p_(std::move(p)), defect_(defect) {}

    Matrix s_;
    Matrix p_;
    double defect_ = 0.0;
};

struct PencilWitness {
    cplx alpha;
    Vector eigenvector;
};

struct PairVerdict {
    bool is_member = false;
    double margin = 0.0;
    std::optional<PencilWitness> witness;
};

/// 2(I - P^*P) - (S - S^*P) - (S^* - P^*S), symmetrized on return.
Matrix rho_pencil(const Matrix& s, const Matrix& p);
Matrix rho_pencil(const OperatorPair& pair);

/// rho(alpha S, alpha^2 P).
Matrix rho_at(const OperatorPair& pair, cplx alpha);

/// Polar-grid test of rho(alpha S, alpha^2 P) >= 0 over the closed unit disc.
///
/// The grid is {j/(R-1) e^{2 pi i k/A}} with R = grid_radial, A = grid_angular,
/// so it includes alpha = 0 and the unit circle. margin is the smallest
/// sampled eigenvalue; membership means margin >= -psd_tol (1 + max ||rho||).
/// The verdict certifies the sampled points only.
PairVerdict check_gamma_contraction(const OperatorPair& pair, const Tolerances& tol = {});

/// min over the closed disc of lambda_min(rho(alpha S, alpha^2 P)).
///
/// Starts from the polar grid minimum and polishes it by alternating
/// golden-section searches in the angle and the radius, so the value is the
/// grid minimum or lower.
double strictness_constant(const OperatorPair& pair, const Tolerances& tol = {});

inline bool is_strict(double c, const Tolerances& tol = {}) { return c > tol.psd_tol; }

/// P isometric, S = S^*P, r(S) <= 2, and the joint spectrum inside bGamma.
PairVerdict check_gamma_isometry(const OperatorPair& pair, const Tolerances& tol = {});

/// Finite-dimensional purity: r(P) <= 1 - rank_tol, or ||P^n|| <= 1e-8 for
/// some n = 2^k <= 512. Throws NotContraction when ||P|| > 1 + psd_tol.
bool check_pure(const Matrix& p, const Tolerances& tol = {});

/// (T1 + T2, T1 T2) for commuting contractions T1, T2.
OperatorPair symmetrize_pair(const Matrix& t1, const Matrix& t2, const Tolerances& tol = {});

/// Splits (S, P) into commuting (T1, T2) with T1 + T2 = S, T1 T2 = P, using
/// the principal root R of S^2 - 4P: T1 = (S + R)/2, T2 = (S - R)/2.
///
/// Throws NoSquareRoot or NonCommutingRoot. Failure does not prove that no
/// decomposition exists; only the principal branch is tried.
std::pair<Matrix, Matrix> desymmetrize_pair(const OperatorPair& pair,
                                            const Tolerances& tol = {});

}  // namespace symbidisc
