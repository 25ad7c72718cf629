#pragma once

#include <vector>

#include "symbidisc/fundamental.hpp"
#include "symbidisc/gamma_pairs.hpp"

namespace symbidisc {

/// Taylor coefficients of the characteristic function
/// Theta_P(z) = -P + z D_{P^*} (I - z P^*)^{-1} D_P, from defect coordinates
/// of P to those of P^*.
struct CharFnCoeffs {
    std::vector<Matrix> theta;  // rank(P^*) x rank(P) each
    Matrix source;
    Matrix basis_p;      // n x rank(P)
    Matrix basis_pstar;  // n x rank(P^*)
};

/// Theta_0 = -P and Theta_k = D_{P^*} (P^*)^{k-1} D_P, both compressed.
CharFnCoeffs characteristic_coeffs(const Matrix& p, int n_terms, const Tolerances& tol = {});

/// Truncated Hardy-space model on N blocks of the defect space of P^*.
struct TruncatedModel {
    int N = 0;
    Eigen::Index block = 0;  // rank of D_{P^*}
    Matrix Fstar;            // fundamental operator of (S^*, P^*)
    Matrix T;                // Fstar^* on diagonal blocks, Fstar on the subdiagonal
    Matrix V;                // block forward shift
    Matrix W;                // h -> (D_{P^*} (P^*)^n h)_{n < N}
    double tail = 0.0;       // ||(P^*)^N||
};

/// Tail target for the automatic choice of N.
inline constexpr double kModelTail = 1e-8;
inline constexpr int kMaxModelBlocks = 4096;

/// Starts from n_blocks and doubles until ||(P^*)^N|| <= kModelTail.
/// Throws NotPure for non-pure P and NoConvergence past kMaxModelBlocks.
TruncatedModel build_model(const OperatorPair& pair, int n_blocks, const Tolerances& tol = {});

struct DilationReport {
    double residual = 0.0;        // max ||W^* T^m V^n W - S^m P^n||
    double shift_intertwine = 0.0;  // ||W P^* - V^* W||
    double s_intertwine = 0.0;      // ||W S^* - T^* W||
    double constant = 0.0;          // (1 + ||S||)(1 + m_max + n_max)
    double tail = 0.0;
    double bound() const { return constant * tail; }
};

DilationReport dilation_check(const TruncatedModel& model, const OperatorPair& pair, int m_max,
                              int n_max);

}  // namespace symbidisc
