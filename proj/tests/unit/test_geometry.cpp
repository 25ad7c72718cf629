#include <doctest.h>

#include "helpers.hpp"
#include "symbidisc/geometry.hpp"
#include "symbidisc/random.hpp"

using namespace symbidisc;

TEST_CASE("symmetrization map")
{
    GammaPoint pt = symmetrize_point(0.5, -0.5);
    CHECK(pt.s == cplx(0.0));
    CHECK(pt.p == cplx(-0.25));
    pt = symmetrize_point(1.0, 1.0);
    CHECK(pt.s == cplx(2.0));
    CHECK(pt.p == cplx(1.0));
    pt = symmetrize_point(0.0, 0.0);
    CHECK(pt.s == cplx(0.0));
    CHECK(pt.p == cplx(0.0));
}

TEST_CASE("roots of z^2 - s z + p")
{
    auto [a, b] = point_roots({0.0, -0.25});
    CHECK(std::abs(a - 0.5) < 1e-15);
    CHECK(std::abs(b + 0.5) < 1e-15);
    std::tie(a, b) = point_roots({2.0, 1.0});
    CHECK(std::abs(a - 1.0) < 1e-15);
    CHECK(std::abs(b - 1.0) < 1e-15);
    std::tie(a, b) = point_roots({1.0, 0.25});
    CHECK(std::abs(a - 0.5) < 1e-15);
    CHECK(std::abs(b - 0.5) < 1e-15);
}

TEST_CASE("roots are ordered by modulus then argument")
{
    const auto [a, b] = point_roots(symmetrize_point(0.9, 0.1));
    CHECK(std::abs(a - 0.1) < 1e-15);
    CHECK(std::abs(b - 0.9) < 1e-15);
    const auto [c, d] = point_roots(symmetrize_point(cplx(0, 1), cplx(0, -1)));
    CHECK(std::arg(c) < std::arg(d));
}

TEST_CASE("region classification examples")
{
    CHECK(classify_point({1.0, 0.0}) == RegionTag::BOUNDARY_NOT_BGAMMA);
    CHECK(classify_point({2.0, 1.0}) == RegionTag::BDGAMMA);
    CHECK(classify_point({0.0, 0.0}) == RegionTag::INTERIOR_G);
    CHECK(classify_point({3.0, 0.0}) == RegionTag::OUTSIDE);
    CHECK(classify_point({0.0, -1.0}) == RegionTag::BGAMMA_NOT_BDGAMMA);
    CHECK(std::string(to_string(RegionTag::BDGAMMA)) == "BDGAMMA");
}

TEST_CASE("open bidisc maps into the interior")
{
    Rng rng(21);
    for (int i = 0; i < 10000; ++i) {
        const cplx z1 = rng.in_disc(1.0 - 1e-6);
        const cplx z2 = rng.in_disc(1.0 - 1e-6);
        REQUIRE(classify_point(symmetrize_point(z1, z2)) == RegionTag::INTERIOR_G);
    }
}

TEST_CASE("torus maps into the distinguished boundary")
{
    Rng rng(22);
    const Tolerances tol;
    for (int i = 0; i < 10000; ++i) {
        const double t1 = 2.0 * std::numbers::pi * rng.uniform();
        // Every tenth draw repeats the angle, optionally nudged inside the band.
        double t2 = 2.0 * std::numbers::pi * rng.uniform();
        if (i % 10 == 0) {
            t2 = t1 + (i % 20 == 0 ? 1e-7 * tol.psd_tol : 0.0);
        }
        const cplx z1 = std::polar(1.0, t1);
        const cplx z2 = std::polar(1.0, t2);
        const RegionTag tag = classify_point(symmetrize_point(z1, z2), tol);
        REQUIRE(in_bgamma(tag));
        // Near a double root the roots are only resolved to about sqrt(eps),
        // so coincidence is judged on |z1 - z2|^2 = |s^2 - 4p|.
        const bool coincident = std::norm(z1 - z2) <= tol.psd_tol;
        CHECK((tag == RegionTag::BDGAMMA) == coincident);
    }
}

TEST_CASE("roots invert the symmetrization map")
{
    Rng rng(23);
    for (int i = 0; i < 2000; ++i) {
        const cplx z1 = rng.in_disc(1.5);
        const cplx z2 = rng.in_disc(1.5);
        const auto [a, b] = point_roots(symmetrize_point(z1, z2));
        const double direct = std::abs(a - z1) + std::abs(b - z2);
        const double swapped = std::abs(a - z2) + std::abs(b - z1);
        CHECK(std::min(direct, swapped) < 1e-10);
        const GammaPoint back = symmetrize_point(a, b);
        const GammaPoint pt = symmetrize_point(z1, z2);
        CHECK(std::abs(back.s - pt.s) <= 1e-12 * (1.0 + std::abs(pt.s)));
        CHECK(std::abs(back.p - pt.p) <= 1e-12 * (1.0 + std::abs(pt.p)));
    }
}
