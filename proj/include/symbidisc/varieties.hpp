#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "symbidisc/geometry.hpp"
#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// The zero set {(s, p) : det(A + p A^* - s I) = 0}.
///
/// A 0x0 matrix is accepted and stands for the slice {s = 0}; this is the
/// convention used for an empty defect space.
class DeterminantalVariety {
public:
    explicit DeterminantalVariety(Matrix a, const Tolerances& tol = {});

    const Matrix& A() const noexcept { return a_; }
    double nr() const noexcept { return nr_; }
    Eigen::Index dim() const noexcept { return a_.rows(); }
    bool degenerate() const noexcept { return a_.rows() == 0; }

private:
    Matrix a_;
    double nr_ = 0.0;
};

/// min over eigenvalues lambda of A + pA^* of |lambda - s| <= residual_tol (1 + ||A||).
bool variety_membership(const DeterminantalVariety& v, const GammaPoint& pt,
                        const Tolerances& tol = {});

/// Eigenvalues of A + pA^*. On |p| = 1 these come from the Hermitian matrix
/// e^{-i theta/2} A + e^{i theta/2} A^*, rotated back by e^{i theta/2}.
std::vector<cplx> fiber_at_p(const DeterminantalVariety& v, cplx p);

struct BoundaryPoint {
    double theta = 0.0;
    GammaPoint pt;
};

struct BoundarySample {
    std::vector<BoundaryPoint> points;
    double max_abs_s = 0.0;

    /// Gap 2 - max |s| to the diagonal circle |s| = 2.
    double delta() const { return 2.0 - max_abs_s; }
};

/// Points (e^{i theta_k/2} mu, e^{i theta_k}), theta_k = 2 pi k/m, for every
/// eigenvalue mu of the Hermitian matrix e^{-i theta_k/2} A + e^{i theta_k/2} A^*.
BoundarySample boundary_sample(const DeterminantalVariety& v, int m);

/// theta,re_s,im_s,re_p,im_p,region_tag with a header row.
void write_boundary_csv(std::ostream& os, const BoundarySample& sample,
                        const Tolerances& tol = {});

enum class DistinguishedStatus {
    DISTINGUISHED_CERTIFIED,
    NOT_DISTINGUISHED_CERTIFIED,
    DISTINGUISHED_EMPIRICAL,
    INCONCLUSIVE,
};

const char* to_string(DistinguishedStatus status);

struct DistinguishedVerdict {
    DistinguishedStatus status = DistinguishedStatus::INCONCLUSIVE;
    std::string evidence;
    std::optional<GammaPoint> witness;
};

/// Exit radius below which a sampled exit point counts as leaving through
/// the topological boundary instead of bGamma.
inline constexpr double kExitTolerance = 1e-6;

/// Decides whether the variety is distinguished.
///
/// 1. omega(A) < 1 - psd_tol: certified distinguished.
/// 2. an eigenvalue alpha of A with ||alpha| - 1| <= psd_tol: certified not
///    distinguished, witness (alpha, 0).
/// 3. otherwise, at m angles: every |p| = 1 fiber point must classify into
///    bGamma, and every point of the zero set with one root z1 = e^{i phi}
///    must have its other root outside the open disc (up to kExitTolerance).
///    Passing gives DISTINGUISHED_EMPIRICAL, else INCONCLUSIVE with the point.
DistinguishedVerdict classify_distinguished(const DeterminantalVariety& v,
                                            const Tolerances& tol = {}, int m = 1024);

/// Bivariate polynomial sum c[i][j] x^i y^j with trailing zero rows and
/// columns trimmed.
class BivarPolynomial {
public:
    BivarPolynomial() = default;
    /// coeffs(i, j) multiplies x^i y^j.
    explicit BivarPolynomial(Matrix coeffs);

    const Matrix& coeffs() const noexcept { return c_; }
    int degree_x() const noexcept { return static_cast<int>(c_.rows()) - 1; }
    int degree_y() const noexcept { return static_cast<int>(c_.cols()) - 1; }
    bool is_zero() const noexcept { return c_.size() == 0; }

    cplx operator()(cplx x, cplx y) const;
    /// sum |c[i][j]| |x|^i |y|^j, the scale for relative evaluation errors.
    double abs_sum(cplx x, cplx y) const;

    /// p(y, x).
    BivarPolynomial swapped() const;
    BivarPolynomial operator*(const BivarPolynomial& other) const;

private:
    Matrix c_;
};

/// Largest degree in z or w accepted for the symmetrized product.
inline constexpr int kMaxSymmetrizedDegree = 16;

/// q(s, p) with q(z + w, z w) = p(z, w) p(w, z).
///
/// Reduction by leading terms in graded-lex order against s = z + w and
/// p = z w. The result is checked at 200 pseudo-random points of the closed
/// bidisc; any relative error above 1e-10 throws VerificationFailed.
BivarPolynomial symmetrize_bidisc_variety(const BivarPolynomial& p);

/// Relative identity error |q(z+w, zw) - pt(z, w)| / max(scale_q, scale_pt),
/// where each scale is the sum of absolute term values at the point.
double symmetric_identity_error(const BivarPolynomial& q, const BivarPolynomial& symmetric,
                                cplx z, cplx w);

}  // namespace symbidisc
