// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "symbidisc/fundamental.hpp"
#include "symbidisc/gamma_pairs.hpp"
#include "symbidisc/geometry.hpp"
#include "symbidisc/model_theory.hpp"
#include "symbidisc/random.hpp"
#include "symbidisc/varieties.hpp"
#include "symbidisc/von_neumann.hpp"

using namespace symbidisc;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit;
    std::function<Outcome()> run;
};

Matrix example_matrix(bool second)
{
    Matrix a = Matrix::Zero(3, 3);
    a(0, 1) = 2.0;
    if (second) {
        a(2, 2) = 1.0;
    }
    return a;
}

Outcome examples()
{
    Rng rng(101);
    Tolerances tol;
    tol.residual_tol = 1e-8;
    const DeterminantalVariety v(example_matrix(false), tol);
    int wrong = 0;
    for (int k = 0; k < 500; ++k) {
        // On the zero set: half on s = 0, half on s^2 = 4p.
        GammaPoint pt;
        if (k % 2 == 0) {
            pt = {0.0, rng.in_disc()};
        } else {
            const cplx z = rng.in_disc();
            pt = {2.0 * z, z * z};
        }
        if (!variety_membership(v, pt, tol)) {
            ++wrong;
        }
    }
    for (int k = 0; k < 500; ++k) {
        GammaPoint pt{};
        double symbolic = 0.0;
        do {
            const cplx z1 = rng.in_disc();
            const cplx z2 = rng.in_disc();
            pt = symmetrize_point(z1, z2);
            symbolic = std::abs(pt.s * (pt.s * pt.s - 4.0 * pt.p));
        } while (symbolic == 0.0);
        if (variety_membership(v, pt, tol)) {
            ++wrong;
        }
    }
    const double omega = v.nr();
    const DistinguishedVerdict verdict = classify_distinguished(DeterminantalVariety(example_matrix(true), tol), tol);
    const bool witness_ok = verdict.witness && std::abs(verdict.witness->s - 1.0) <= 1e-9 &&
                            std::abs(verdict.witness->p) <= 1e-12;
    std::ostringstream os;
    os << "misclassified " << wrong << "/1000, omega(A) = " << omega << ", example 2 verdict "
       << to_string(verdict.status);
    if (verdict.witness) {
        os << " witness (" << verdict.witness->s.real() << "," << verdict.witness->p.real() << ")";
    }
    return {wrong == 0 && std::abs(omega - 1.0) <= 1e-6 &&
                verdict.status == DistinguishedStatus::NOT_DISTINGUISHED_CERTIFIED && witness_ok,
            os.str()};
}

// Mixed corpus of Gamma-contractions, dimension in [2, 6].
OperatorPair corpus_pair(Rng& rng, int index)
{
    switch (index % 4) {
    case 0: return random_symmetrized_pair(rng, rng.integer(2, 6));
    case 1: {
        const int k = rng.integer(1, 2);
        const int blocks = rng.integer(2, 6 / k);
        const double radius = rng.uniform() < 0.25 ? 1.0 : rng.uniform(0.2, 1.0);
        return random_converse_pair(rng, k, blocks, radius);
    }
    case 2: {
        const int n = rng.integer(2, 6);
        return random_strict_pair(rng, n, rng.uniform(0.5, 1.0));
    }
    default: {
        const int u = rng.integer(1, 2);
        return random_unitary_sum(rng, u, rng.integer(u == 1 ? 1 : 0, 6 - u));
    }
    }
}

Outcome fundamental_suite()
{
    Rng rng(202);
    const Tolerances tol;
    double worst_residual = 0.0;
    double worst_nr = 0.0;
    int failures = 0;
    for (int i = 0; i < 200; ++i) {
        const OperatorPair pair = corpus_pair(rng, i);
        try {
            const FundamentalOperator f = solve_fundamental(pair, tol);
            const double scaled = f.residual / (1.0 + op_norm(pair.S()));
            worst_residual = std::max(worst_residual, scaled);
            worst_nr = std::max(worst_nr, f.nr);
            if (scaled > 1e-8 || f.nr > 1.0 + 1e-9) {
                ++failures;
            }
        } catch (const Error& e) {
            std::fprintf(stderr, "instance %d: %s\n", i, e.what());
            ++failures;
        }
    }
    std::ostringstream os;
    os << "max residual/scale " << worst_residual << ", max omega(F) " << worst_nr << ", failures "
       << failures << "/200";
    return {failures == 0, os.str()};
}

Outcome strictness_suite()
{
    Rng rng(303);
    const Tolerances tol;
    const double radii[] = {0.5, 0.8, 0.95};
    double min_c = 1e300;
    double worst_gap = -1e300;
    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        const OperatorPair pair = random_strict_pair(rng, rng.integer(2, 5), radii[i % 3]);
        const double c = strictness_constant(pair, tol);
        const double nr = solve_fundamental(pair, tol).nr;
        min_c = std::min(min_c, c);
        worst_gap = std::max(worst_gap, nr - (1.0 - c / 2.0));
        if (!(c > 0.0) || nr > 1.0 - c / 2.0 + 1e-8) {
            ++failures;
        }
    }
    std::ostringstream os;
    os << "min c " << min_c << ", max omega(F) - (1 - c/2) " << worst_gap << ", failures "
       << failures << "/100";
    return {failures == 0, os.str()};
}

Outcome converse_suite()
{
    Rng rng(404);
    const Tolerances tol;
    double worst_residual = 0.0;
    double worst_embed = 0.0;
    double worst_sv = 0.0;
    int failures = 0;
    for (int i = 0; i < 50; ++i) {
        const int k = rng.integer(1, 4);
        const int blocks = rng.integer(1, 6);
        const double radius = i % 5 == 0 ? 1.0 : rng.uniform(0.1, 1.0);
        const Matrix fhat = random_with_numerical_radius(rng, k, radius, tol);
        const OperatorPair pair = truncated_model_from_F(fhat, blocks, tol);
        const PairVerdict verdict = check_gamma_contraction(pair, tol);
        const FundamentalOperator f = solve_fundamental(pair, tol);
        Matrix expected = Matrix::Zero(pair.dim(), pair.dim());
        expected.topLeftCorner(k, k) = fhat;
        const double embed = op_norm(f.embedded() - expected);
        const RealVector sv_f = singular_values(f.F);
        const RealVector sv_hat = singular_values(fhat);
        const double sv = sv_f.size() == sv_hat.size() ? (sv_f - sv_hat).cwiseAbs().maxCoeff() : 1e300;
        worst_residual = std::max(worst_residual, f.residual);
        worst_embed = std::max(worst_embed, embed);
        worst_sv = std::max(worst_sv, sv);
        if (!verdict.is_member || f.residual > 1e-10 || embed > 1e-10 || sv > 1e-9) {
            ++failures;
        }
    }
    std::ostringstream os;
    os << "max residual " << worst_residual << ", max ||F - fhat|| " << worst_embed
       << ", max singular value gap " << worst_sv << ", failures " << failures << "/50";
    return {failures == 0, os.str()};
}

OperatorPair vn_pair(Rng& rng, int index)
{
    const double radii[] = {0.9, 0.99, 0.999};
    switch (index % 4) {
    case 0: return random_symmetrized_pair(rng, rng.integer(1, 4));
    case 1: {
        const int k = rng.integer(1, 2);
        const int blocks = rng.integer(1, 3);
        const double radius = rng.uniform() < 0.3 ? 1.0 : rng.uniform(0.2, 1.0);
        return random_converse_pair(rng, k, blocks, radius);
    }
    case 2: return random_symmetrized_pair(rng, rng.integer(1, 4)).scaled(radii[(index / 4) % 3]);
    default: {
        const int u = rng.integer(1, 2);
        return random_unitary_sum(rng, u, rng.integer(0, 3));
    }
    }
}

Outcome von_neumann_suite()
{
    Rng rng(505);
    const Tolerances tol;
    double max_ratio = 0.0;
    int failures = 0;
    int degenerate = 0;
    for (int i = 0; i < 300; ++i) {
        const OperatorPair pair = vn_pair(rng, i);
        for (int j = 0; j < 10; ++j) {
            const int k = rng.integer(1, 2);
            const MatrixPolynomial f = random_matrix_polynomial(rng, k, rng.integer(0, 3));
            const VNReport report = vn_report(f, pair, 2048, tol);
            max_ratio = std::max(max_ratio, report.ratio);
            degenerate += report.degenerate ? 1 : 0;
            if (!report.holds) {
                ++failures;
                std::fprintf(stderr, "pair %d poly %d: lhs %.12g rhs %.12g\n", i, j, report.lhs, report.rhs);
            }
        }
    }
    std::ostringstream os;
    os << "max ratio " << max_ratio << ", violations " << failures << "/3000, with unitary part "
       << degenerate;
    return {failures == 0, os.str()};
}

Outcome distinguished_suite()
{
    Rng rng(606);
    const Tolerances tol;
    int failures = 0;
    double min_delta = 1e300;
    for (int i = 0; i < 100; ++i) {
        const int k = rng.integer(1, 4);
        const Matrix a = random_with_numerical_radius(rng, k, rng.uniform(0.05, 0.95), tol);
        const DeterminantalVariety v(a, tol);
        const DistinguishedVerdict verdict = classify_distinguished(v, tol);
        const BoundarySample sample = boundary_sample(v, 1024);
        bool all_in = true;
        for (const BoundaryPoint& bp : sample.points) {
            all_in = all_in && in_bgamma(classify_point(bp.pt, tol));
        }
        min_delta = std::min(min_delta, sample.delta());
        if (verdict.status != DistinguishedStatus::DISTINGUISHED_CERTIFIED || !all_in || !(sample.delta() > 0.0)) {
            ++failures;
        }
    }
    for (int i = 0; i < 20; ++i) {
        const Matrix a = random_planted_unimodular(rng, rng.integer(1, 4), tol);
        const DistinguishedVerdict verdict = classify_distinguished(DeterminantalVariety(a, tol), tol);
        if (verdict.status != DistinguishedStatus::NOT_DISTINGUISHED_CERTIFIED) {
            ++failures;
        }
    }
    std::ostringstream os;
    os << "min delta " << min_delta << ", failures " << failures << "/120";
    return {failures == 0, os.str()};
}

// Rounding floor added to C * tail: nilpotent P gives tail = 0 exactly.
constexpr double kRoundingFloor = 1e-10;

Outcome model_suite()
{
    Rng rng(707);
    const Tolerances tol;
    int failures = 0;
    double worst_ratio = 0.0;
    double worst_nilpotent = 0.0;
    double max_tail = 0.0;
    int max_n = 0;
    for (int i = 0; i < 100; ++i) {
        const bool nilpotent = i % 5 == 0;
        const OperatorPair pair = random_pure_pair(rng, rng.integer(2, 5), 0.8, nilpotent, tol);
        const TruncatedModel model = build_model(pair, 8, tol);
        const DilationReport rep = dilation_check(model, pair, 3, 3);
        const double limit = rep.bound() + kRoundingFloor;
        const double worst = std::max({rep.residual, rep.shift_intertwine, rep.s_intertwine});
        worst_ratio = std::max(worst_ratio, worst / limit);
        max_tail = std::max(max_tail, rep.tail);
        max_n = std::max(max_n, model.N);
        if (worst > limit || rep.tail > 1e-8) {
            ++failures;
        }
        if (nilpotent) {
            worst_nilpotent = std::max(worst_nilpotent, worst);
            if (worst > 1e-10) {
                ++failures;
            }
        }
    }
    std::ostringstream os;
    os << "max residual/(C tail + 1e-10) " << worst_ratio << ", max tail " << max_tail
       << ", max N " << max_n << ", nilpotent max residual " << worst_nilpotent << ", failures "
       << failures;
    return {failures == 0, os.str()};
}

Outcome symmetric_suite()
{
    Rng rng(808);
    int failures = 0;
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        Matrix c;
        if (i == 0) {
            c = Matrix::Zero(2, 2);
            c(1, 0) = 1.0;
            c(0, 1) = -1.0;
        } else {
            const int dx = rng.integer(0, 4);
            const int dy = rng.integer(0, 4);
            c = random_gaussian(rng, dx + 1, dy + 1);
        }
        const BivarPolynomial p(c);
        try {
            const BivarPolynomial q = symmetrize_bidisc_variety(p);
            const BivarPolynomial sym = p * p.swapped();
            for (int k = 0; k < 200; ++k) {
                const cplx z = rng.in_disc();
                const cplx w = rng.in_disc();
                const double err = symmetric_identity_error(q, sym, z, w);
                worst = std::max(worst, err);
                if (err > 1e-10) {
                    ++failures;
                    break;
                }
            }
            if (i == 0) {
                // (z - w)(w - z) = -(s^2 - 4p).
                Matrix expected = Matrix::Zero(3, 2);
                expected(2, 0) = -1.0;
                expected(0, 1) = 4.0;
                const Matrix& got = q.coeffs();
                if (got.rows() != 3 || got.cols() != 2 || (got - expected).cwiseAbs().maxCoeff() > 1e-14) {
                    ++failures;
                }
            }
        } catch (const Error& e) {
            std::fprintf(stderr, "polynomial %d: %s\n", i, e.what());
            ++failures;
        }
    }
    std::ostringstream os;
    os << "max relative error " << worst << ", failures " << failures << "/50";
    return {failures == 0, os.str()};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "worked examples", 5.0, examples},
        {2, "fundamental operator", 30.0, fundamental_suite},
        {3, "strictness bound", 60.0, strictness_suite},
        {4, "converse construction", 20.0, converse_suite},
        {5, "von Neumann inequality", 600.0, von_neumann_suite},
        {6, "distinguished classification", 30.0, distinguished_suite},
        {7, "dilation model", 120.0, model_suite},
        {8, "symmetric rewrite", 10.0, symmetric_suite},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.time_limit;
        const bool pass = out.pass && in_time;
        failed += pass ? 0 : 1;
        std::printf("criterion %d [%s] %s: %s; %.2f s (limit %.0f s)\n", c.id, pass ? "PASS" : "FAIL",
                    c.name, out.detail.c_str(), secs, c.time_limit);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
