#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "symbidisc/random.hpp"

using namespace symbidisc;
using testing::mat;

TEST_CASE("numerical radius of small examples")
{
    Matrix a = Matrix::Zero(3, 3);
    a(0, 1) = 2.0;
    CHECK(numerical_radius(a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(numerical_radius(Matrix::Identity(4, 4)) == doctest::Approx(1.0).epsilon(1e-12));

    const Matrix b = mat({{0, 1}, {0, 0}});
    const double expected = testing::dense_numerical_radius(b);
    CHECK(numerical_radius(b) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(std::abs(numerical_radius(b) - expected) < 1e-9);
}

TEST_CASE("numerical radius agrees with a dense sweep on random matrices")
{
    Rng rng(11);
    for (int i = 0; i < 10; ++i) {
        const Matrix a = random_gaussian(rng, 3, 3);
        CHECK(numerical_radius(a) >= testing::dense_numerical_radius(a, 20000) - 1e-12);
        CHECK(numerical_radius(a) - testing::dense_numerical_radius(a, 20000) < 1e-6);
    }
}

TEST_CASE("numerical radius is rotation invariant and sits between norm bounds")
{
    Rng rng(12);
    for (int i = 0; i < 500; ++i) {
        const int n = rng.integer(1, 8);
        const Matrix a = random_gaussian(rng, n, n);
        const double w = numerical_radius(a);
        const double norm = op_norm(a);
        CHECK(w <= norm * (1.0 + 1e-12));
        CHECK(norm <= 2.0 * w * (1.0 + 1e-12));
        if (i < 100) {
            const cplx u = rng.unit_complex();
            CHECK(std::abs(numerical_radius(u * a) - w) < 1e-9);
        }
    }
}

TEST_CASE("rotated Hermitian maximum equals twice the numerical radius")
{
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const int n = rng.integer(1, 6);
        const Matrix a = random_gaussian(rng, n, n);
        // ||e^{it}A + e^{-it}A^*|| is the larger of |lambda_max| and |lambda_min|.
        auto norm_at = [&](double t) {
            const cplx u = std::polar(1.0, t);
            return op_norm(u * a + std::conj(u) * a.adjoint());
        };
        double best = 0.0;
        double arg = 0.0;
        const int grid = 1024;
        for (int k = 0; k < grid; ++k) {
            const double t = 2.0 * std::numbers::pi * k / grid;
            if (norm_at(t) > best) {
                best = norm_at(t);
                arg = t;
            }
        }
        const double step = 2.0 * std::numbers::pi / grid;
        best = std::max(best, golden_section_max(norm_at, arg - step, arg + step, 1e-12).second);
        CHECK(std::abs(best - 2.0 * numerical_radius(a)) < 1e-8);
    }
}

TEST_CASE("joint spectrum examples")
{
    SUBCASE("diagonal pair")
    {
        const Matrix s = mat({{0.3, 0}, {0, -0.5}});
        const Matrix p = mat({{0.1, 0}, {0, 0.7}});
        auto js = joint_spectrum(s, p);
        REQUIRE(js.size() == 2);
        std::sort(js.begin(), js.end(), [](auto x, auto y) { return x.s.real() < y.s.real(); });
        CHECK(js[0].s == cplx(-0.5));
        CHECK(js[0].p == cplx(0.7));
        CHECK(js[1].s == cplx(0.3));
        CHECK(js[1].p == cplx(0.1));
    }
    SUBCASE("Jordan block with identity")
    {
        const auto js = joint_spectrum(mat({{1, 1}, {0, 1}}), Matrix::Identity(2, 2));
        REQUIRE(js.size() == 2);
        for (const auto& j : js) {
            CHECK(std::abs(j.s - 1.0) < 1e-7);
            CHECK(std::abs(j.p - 1.0) < 1e-12);
        }
    }
    SUBCASE("triangular with P = S^2")
    {
        const Matrix s = mat({{1, 1}, {0, 2}});
        auto js = joint_spectrum(s, s * s);
        REQUIRE(js.size() == 2);
        std::sort(js.begin(), js.end(), [](auto x, auto y) { return x.s.real() < y.s.real(); });
        CHECK(std::abs(js[0].s - 1.0) < 1e-12);
        CHECK(std::abs(js[0].p - 1.0) < 1e-12);
        CHECK(std::abs(js[1].s - 2.0) < 1e-12);
        CHECK(std::abs(js[1].p - 4.0) < 1e-12);
    }
    SUBCASE("non-commuting input")
    {
        CHECK_THROWS_AS(joint_spectrum(mat({{0, 1}, {0, 0}}), mat({{0, 0}, {1, 0}})), Error);
    }
}

TEST_CASE("joint spectrum of functions of a diagonal matrix")
{
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        const int n = rng.integer(1, 6);
        Vector d(n);
        for (int k = 0; k < n; ++k) {
            d(k) = rng.in_disc();
        }
        const Matrix s = (d.array() + d.array().square()).matrix().asDiagonal();
        const Matrix p = (d.array() * 0.5).matrix().asDiagonal();
        const auto js = joint_spectrum(s, p);
        REQUIRE(js.size() == static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const cplx fs = d(k) + d(k) * d(k);
            const cplx fp = 0.5 * d(k);
            const bool found = std::any_of(js.begin(), js.end(), [&](const JointEigenvalue& j) {
                return j.s == fs && j.p == fp;
            });
            CHECK(found);
        }
    }
}

TEST_CASE("tolerance validation and refinement")
{
    Tolerances t;
    CHECK_NOTHROW(t.validate());
    t.psd_tol = -1.0;
    CHECK_THROWS_AS(t.validate(), Error);
    Tolerances g;
    g.grid_radial = 1;
    CHECK_THROWS_AS(g.validate(), Error);
    const Tolerances r = Tolerances{}.refined();
    CHECK(r.grid_angular == 2048);
    CHECK(r.grid_radial == 41);
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(numerical_radius(Matrix::Zero(2, 3)), Error);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = cplx(std::nan(""), 0.0);
    CHECK_THROWS_AS(numerical_radius(bad), Error);
    try {
        numerical_radius(Matrix::Zero(2, 3));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonSquare);
    }
}

TEST_CASE("square roots")
{
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
        const Matrix g = random_gaussian(rng, 4, 4);
        const Matrix h = g * g.adjoint();
        const Matrix r = psd_sqrt(h);
        CHECK(op_norm(r * r - h) < 1e-10 * (1.0 + op_norm(h)));
        const Matrix m = random_gaussian(rng, 3, 3);
        const Matrix root = principal_sqrt(m, Tolerances{});
        CHECK(op_norm(root * root - m) < 1e-10 * (1.0 + op_norm(m)));
    }
    CHECK_THROWS_AS(principal_sqrt(mat({{0, 1}, {0, 0}}), Tolerances{}), Error);
}
