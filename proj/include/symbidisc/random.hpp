#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "symbidisc/gamma_pairs.hpp"
#include "symbidisc/numerics.hpp"
#include "symbidisc/von_neumann.hpp"

namespace symbidisc {

/// Seeded generator on std::mt19937_64. Uniform and normal draws are built
/// from the raw 64-bit stream here, not through <random> distributions,
/// so a seed gives the same numbers on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    /// Standard normal (Box-Muller).
    double normal();
    /// Real and imaginary parts independent N(0, 1/2).
    cplx complex_normal();
    cplx unit_complex();
    /// Uniform on the closed disc of the given radius.
    cplx in_disc(double radius = 1.0);
    /// Uniform on [lo, hi].
    int integer(int lo, int hi);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

Matrix random_gaussian(Rng& rng, Eigen::Index rows, Eigen::Index cols);
/// Haar-distributed unitary (QR of a Gaussian matrix with phases fixed).
Matrix random_unitary(Rng& rng, Eigen::Index n);

/// Two commuting contractions: polynomials of one random upper-triangular
/// matrix, conjugated by a random unitary, each rescaled to norm in [0.5, 1].
/// With nilpotent set, the triangular matrix has zero diagonal.
std::pair<Matrix, Matrix> random_commuting_contractions(Rng& rng, Eigen::Index n,
                                                        bool nilpotent = false);

/// pi(T1, T2) for random commuting contractions; always a Gamma-contraction.
OperatorPair random_symmetrized_pair(Rng& rng, Eigen::Index n, const Tolerances& tol = {});

/// Gaussian k x k matrix rescaled to numerical radius target.
Matrix random_with_numerical_radius(Rng& rng, Eigen::Index k, double target,
                                    const Tolerances& tol = {});

/// truncated_model_from_F on a random fhat of size k with omega(fhat) = radius.
OperatorPair random_converse_pair(Rng& rng, Eigen::Index k, int blocks, double radius,
                                  const Tolerances& tol = {});

/// (rS, r^2P) for a random symmetrized pair (S, P) of dimension n.
OperatorPair random_strict_pair(Rng& rng, Eigen::Index n, double r, const Tolerances& tol = {});

/// Symmetrized pair rescaled so that r(P) <= max_radius. With nilpotent set,
/// P is nilpotent.
OperatorPair random_pure_pair(Rng& rng, Eigen::Index n, double max_radius = 0.8,
                              bool nilpotent = false, const Tolerances& tol = {});

/// A Gamma-unitary block (joint spectrum on bGamma) joined with a random
/// symmetrized pair, mixed by a random unitary.
OperatorPair random_unitary_sum(Rng& rng, Eigen::Index unitary_dim, Eigen::Index rest_dim,
                                const Tolerances& tol = {});

/// U (e^{i phi} + B) U^* with omega(B) <= 1, so A has a unimodular eigenvalue.
Matrix random_planted_unimodular(Rng& rng, Eigen::Index k, const Tolerances& tol = {});

/// Random f with k x k coefficients and total degree at most degree.
MatrixPolynomial random_matrix_polynomial(Rng& rng, Eigen::Index k, int degree);

}  // namespace symbidisc
