#include "symbidisc/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace symbidisc {

const char* to_string(RegionTag tag)
{
    switch (tag) {
    case RegionTag::INTERIOR_G: return "INTERIOR_G";
    case RegionTag::BOUNDARY_NOT_BGAMMA: return "BOUNDARY_NOT_BGAMMA";
    case RegionTag::BGAMMA_NOT_BDGAMMA: return "BGAMMA_NOT_BDGAMMA";
    case RegionTag::BDGAMMA: return "BDGAMMA";
    case RegionTag::OUTSIDE: return "OUTSIDE";
    }
    return "UNKNOWN";
}

GammaPoint symmetrize_point(cplx z1, cplx z2)
{
    return {z1 + z2, z1 * z2};
}

std::pair<cplx, cplx> point_roots(const GammaPoint& pt)
{
    const cplx s = pt.s;
    const cplx disc = std::sqrt(s * s - 4.0 * pt.p);
    // Pick the sign that avoids cancellation in s +/- disc.
    const cplx big = (std::real(std::conj(s) * disc) >= 0.0 ? s + disc : s - disc) / 2.0;
    cplx z1 = big;
    cplx z2 = big == cplx(0.0) ? cplx(0.0) : pt.p / big;

    auto before = [](cplx a, cplx b) {
        const double ma = std::abs(a);
        const double mb = std::abs(b);
        if (std::abs(ma - mb) > 1e-12 * std::max({1.0, ma, mb})) {
            return ma < mb;
        }
        return std::arg(a) < std::arg(b);
    };
    if (before(z2, z1)) {
        std::swap(z1, z2);
    }
    return {z1, z2};
}

RegionTag classify_point(const GammaPoint& pt, const Tolerances& tol)
{
    const double band = tol.psd_tol;
    const cplx disc = pt.s * pt.s - 4.0 * pt.p;
    double m1 = 0.0;
    double m2 = 0.0;
    bool coincident = false;
    if (std::abs(disc) <= band) {
        m1 = m2 = std::abs(pt.s) / 2.0;
        coincident = true;
    } else {
        const auto [z1, z2] = point_roots(pt);
        m1 = std::abs(z1);
        m2 = std::abs(z2);
        coincident = std::abs(z1 - z2) <= band;
    }
    const double hi = std::max(m1, m2);
    const double lo = std::min(m1, m2);
    if (hi > 1.0 + band) {
        return RegionTag::OUTSIDE;
    }
    if (hi < 1.0 - band) {
        return RegionTag::INTERIOR_G;
    }
    if (lo >= 1.0 - band) {
        return coincident ? RegionTag::BDGAMMA : RegionTag::BGAMMA_NOT_BDGAMMA;
    }
    return RegionTag::BOUNDARY_NOT_BGAMMA;
}

}  // namespace symbidisc
