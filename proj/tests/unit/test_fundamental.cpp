#include <doctest.h>

#include "helpers.hpp"
#include "symbidisc/fundamental.hpp"
#include "symbidisc/random.hpp"

using namespace symbidisc;
using testing::mat;
using testing::scalar;

namespace {

// ||S - S^*P - D_P X D_P|| for X on the defect space in the basis of f.
double residual_for(const OperatorPair& pair, const FundamentalOperator& f, const Matrix& x)
{
    const Matrix d = defect_operator(pair.P()).D;
    const Matrix g = pair.S() - pair.S().adjoint() * pair.P();
    return op_norm(g - d * f.basis * x * f.basis.adjoint() * d);
}

}  // namespace

TEST_CASE("defect operator examples")
{
    DefectData d = defect_operator(Matrix::Zero(3, 3));
    CHECK(d.D.isApprox(Matrix::Identity(3, 3)));
    CHECK(d.rank == 3);

    d = defect_operator(scalar(0.6));
    CHECK(std::abs(d.D(0, 0) - 0.8) < 1e-15);
    CHECK(d.rank == 1);

    d = defect_operator(mat({{0, 0.6}, {0, 0}}));
    CHECK(op_norm(d.D - mat({{1, 0}, {0, 0.8}})) < 1e-15);
    CHECK(d.rank == 2);

    d = defect_operator(scalar(1.0));
    CHECK(d.rank == 0);
    CHECK(d.basis.cols() == 0);

    CHECK_THROWS_AS(defect_operator(scalar(1.1)), Error);
}

TEST_CASE("defect data invariants on random contractions")
{
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        const OperatorPair pair = random_symmetrized_pair(rng, rng.integer(1, 6));
        const Matrix& p = pair.P();
        const DefectData d = defect_operator(p);
        const Eigen::Index n = p.rows();
        CHECK(op_norm(d.D * d.D - (Matrix::Identity(n, n) - p.adjoint() * p)) < 1e-10);
        CHECK(op_norm(d.basis.adjoint() * d.basis - Matrix::Identity(d.rank, d.rank)) < 1e-10);
        CHECK(d.basis.cols() == d.rank);
    }
}

TEST_CASE("fundamental operator examples")
{
    FundamentalOperator f = solve_fundamental(OperatorPair::make(scalar(1.0), scalar(0.25)));
    REQUIRE(f.F.rows() == 1);
    CHECK(std::abs(std::abs(f.F(0, 0)) - 0.8) < 1e-15);
    CHECK(std::abs(f.embedded()(0, 0) - 0.8) < 1e-15);

    f = solve_fundamental(OperatorPair::make(scalar(2.0), scalar(1.0)));
    CHECK(f.F.rows() == 0);
    CHECK(f.residual == 0.0);

    const Matrix s = mat({{0, 2}, {0, 0}});
    f = solve_fundamental(OperatorPair::make(s, Matrix::Zero(2, 2)));
    CHECK(op_norm(f.embedded() - s) < 1e-15);
    CHECK(std::abs(f.nr - 1.0) < 1e-10);
}

TEST_CASE("unsolvable fundamental equation is reported")
{
    // P unitary with S != S^*P leaves nothing on the defect space to absorb S - S^*P.
    try {
        solve_fundamental(OperatorPair::make(scalar(1.0), scalar(-1.0)));
        FAIL("expected ResidualTooLarge");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ResidualTooLarge);
    }
}

TEST_CASE("fundamental operator is unique")
{
    Rng rng(42);
    for (int i = 0; i < 100; ++i) {
        const OperatorPair pair = random_symmetrized_pair(rng, rng.integer(2, 5));
        const FundamentalOperator f = solve_fundamental(pair);
        if (f.F.rows() == 0) {
            continue;
        }
        const Eigen::Index r = f.F.rows();
        const Vector u = random_gaussian(rng, r, 1).col(0).normalized();
        const Vector v = random_gaussian(rng, r, 1).col(0).normalized();
        const Matrix bump = 1e-3 * u * v.adjoint();
        CHECK(residual_for(pair, f, f.F + bump) > f.residual);
    }
}

TEST_CASE("numerical radius bound on verified Gamma-contractions")
{
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        const OperatorPair pair = i % 2 == 0 ? random_symmetrized_pair(rng, rng.integer(2, 5))
                                             : random_converse_pair(rng, rng.integer(1, 2), 2, 1.0);
        REQUIRE(check_gamma_contraction(pair).is_member);
        const FundamentalOperator f = solve_fundamental(pair, Tolerances{}, true);
        CHECK(f.nr <= 1.0 + 1e-9);
    }
}

TEST_CASE("strict pairs have numerical radius at most 1 - c/2")
{
    Rng rng(44);
    for (int i = 0; i < 15; ++i) {
        const OperatorPair pair = random_strict_pair(rng, rng.integer(2, 4), 0.9);
        const double c = strictness_constant(pair);
        CHECK(solve_fundamental(pair).nr <= 1.0 - c / 2.0 + 1e-9);
    }
}

TEST_CASE("unitary conjugation gives an equivalent fundamental operator")
{
    Rng rng(45);
    for (int i = 0; i < 30; ++i) {
        const OperatorPair pair = random_symmetrized_pair(rng, rng.integer(2, 5));
        const Matrix u = random_unitary(rng, pair.dim());
        const OperatorPair moved =
            OperatorPair::make(u * pair.S() * u.adjoint(), u * pair.P() * u.adjoint());
        const FundamentalOperator f = solve_fundamental(pair);
        const FundamentalOperator g = solve_fundamental(moved);
        REQUIRE(f.F.rows() == g.F.rows());
        CHECK((singular_values(f.F) - singular_values(g.F)).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(f.nr - g.nr) < 1e-9);
    }
}

TEST_CASE("converse construction examples")
{
    OperatorPair pair = truncated_model_from_F(scalar(0.8), 1);
    CHECK(pair.S()(0, 0) == cplx(0.8));
    CHECK(pair.P()(0, 0) == cplx(0.0));

    pair = truncated_model_from_F(scalar(0.8), 3);
    const FundamentalOperator f = solve_fundamental(pair);
    REQUIRE(f.F.rows() == 1);
    CHECK(std::abs(std::abs(f.F(0, 0)) - 0.8) < 1e-12);
    CHECK(f.residual < 1e-12);

    CHECK_THROWS_AS(truncated_model_from_F(scalar(1.2), 2), Error);
    CHECK_THROWS_AS(truncated_model_from_F(scalar(0.5), 0), Error);
}

TEST_CASE("converse model structure")
{
    Rng rng(46);
    for (int i = 0; i < 10; ++i) {
        const int k = rng.integer(1, 4);
        const int blocks = rng.integer(1, 6);
        const Matrix fhat = random_with_numerical_radius(rng, k, rng.uniform(0.1, 1.0));
        const OperatorPair pair = truncated_model_from_F(fhat, blocks);
        const Matrix& s = pair.S();
        const Matrix& p = pair.P();
        CHECK((s * p - p * s).norm() == 0.0);
        CHECK(matrix_power(p, blocks).isZero());
        Matrix g = Matrix::Zero(k * blocks, k * blocks);
        g.topLeftCorner(k, k) = fhat;
        CHECK(op_norm(s - s.adjoint() * p - g) < 1e-15);
        CHECK(check_gamma_contraction(pair).is_member);

        // max over theta of ||fhat^* + e^{2 i theta} fhat|| stays below 2.
        double worst = 0.0;
        for (int t = 0; t < 720; ++t) {
            const cplx u = std::polar(1.0, 2.0 * std::numbers::pi * t / 720);
            worst = std::max(worst, op_norm(fhat.adjoint() + u * fhat));
        }
        CHECK(worst <= 2.0 + 1e-9);
    }
}
