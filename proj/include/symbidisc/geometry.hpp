#pragma once

#include <utility>

#include "symbidisc/numerics.hpp"

namespace symbidisc {

/// A point (s, p) of C^2, read in the coordinates of the symmetrization map.
struct GammaPoint {
    cplx s;
    cplx p;
};

enum class RegionTag {
    INTERIOR_G,
    BOUNDARY_NOT_BGAMMA,
    BGAMMA_NOT_BDGAMMA,
    BDGAMMA,
    OUTSIDE,
};

const char* to_string(RegionTag tag);

/// (z1 + z2, z1 z2).
GammaPoint symmetrize_point(cplx z1, cplx z2);

/// Both roots of z^2 - s z + p, sorted by (modulus, argument).
std::pair<cplx, cplx> point_roots(const GammaPoint& pt);

/// Region of a point relative to Gamma, its distinguished boundary and the
/// diagonal circle {(2z, z^2) : |z| = 1}. Bands are absolute in psd_tol on
/// the root moduli. A discriminant |s^2 - 4p| <= psd_tol is treated as a
/// double root z = s/2, since the root split is only accurate to the square
/// root of the rounding error there.
RegionTag classify_point(const GammaPoint& pt, const Tolerances& tol = {});

inline bool in_bgamma(RegionTag tag)
{
    return tag == RegionTag::BGAMMA_NOT_BDGAMMA || tag == RegionTag::BDGAMMA;
}

}  // namespace symbidisc
