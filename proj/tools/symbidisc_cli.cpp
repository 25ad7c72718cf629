// symbidisc: command-line front end.
//
// Exit codes: 0 success / positive verdict, 1 negative verdict,
// 2 input or validation error, 3 failed internal invariant.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symbidisc/fundamental.hpp"
#include "symbidisc/gamma_pairs.hpp"
#include "symbidisc/matrix_io.hpp"
#include "symbidisc/model_theory.hpp"
#include "symbidisc/random.hpp"
#include "symbidisc/varieties.hpp"
#include "symbidisc/von_neumann.hpp"

using namespace symbidisc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct Config {
    std::uint64_t seed = 1;
    Tolerances tol;
    bool refine = false;
    std::string out;

    Tolerances tolerances() const { return refine ? tol.refined() : tol; }
};

void emit(const Config& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) {
        throw Error(ErrorKind::InvalidArgument, "cannot write " + cfg.out);
    }
    f << text;
}

OperatorPair load_pair(const std::string& s_path, const std::string& p_path, const Tolerances& tol)
{
    return OperatorPair::make(read_matrix_file(s_path), read_matrix_file(p_path), tol);
}

json point_json(const GammaPoint& pt)
{
    return {{"s", complex_to_json(pt.s)}, {"p", complex_to_json(pt.p)}};
}

json report_json(const VNReport& r)
{
    return {{"lhs", r.lhs},
            {"rhs", r.rhs},
            {"ratio", r.ratio},
            {"holds", r.holds},
            {"m", r.m},
            {"argmax",
             {{"theta", r.argmax_theta},
              {"s", complex_to_json(r.argmax.s)},
              {"p", complex_to_json(r.argmax.p)}}},
            {"degenerate", r.degenerate}};
}

// ---------------------------------------------------------------- check

int cmd_check(const Config& cfg, const std::string& s_path, const std::string& p_path)
{
    const Tolerances tol = cfg.tolerances();
    const OperatorPair pair = load_pair(s_path, p_path, tol);
    const PairVerdict verdict = check_gamma_contraction(pair, tol);
    const double c = strictness_constant(pair, tol);
    const PairVerdict iso = check_gamma_isometry(pair, tol);

    json out;
    out["dim"] = pair.dim();
    out["gamma_contraction"] = verdict.is_member;
    out["margin"] = verdict.margin;
    if (verdict.witness) {
        out["witness_alpha"] = complex_to_json(verdict.witness->alpha);
    }
    out["strictness"] = c;
    out["strict"] = is_strict(c, tol);
    out["gamma_isometry"] = iso.is_member;
    out["isometry_margin"] = iso.margin;
    if (op_norm(pair.P()) <= 1.0 + tol.psd_tol) {
        out["pure"] = check_pure(pair.P(), tol);
    } else {
        out["pure"] = nullptr;
    }
    out["commutator_defect"] = pair.commutator_defect();
    emit(cfg, dump_json(out));
    return verdict.is_member ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- fundop

int cmd_fundop(const Config& cfg, const std::string& s_path, const std::string& p_path)
{
    const Tolerances tol = cfg.tolerances();
    const OperatorPair pair = load_pair(s_path, p_path, tol);
    const bool member = check_gamma_contraction(pair, tol).is_member;
    const FundamentalOperator f = solve_fundamental(pair, tol, member);
    json out;
    out["gamma_contraction"] = member;
    out["rank"] = f.F.rows();
    out["F"] = matrix_to_json(f.F);
    out["basis"] = matrix_to_json(f.basis);
    out["residual"] = f.residual;
    out["nr"] = f.nr;
    emit(cfg, dump_json(out));
    return kExitOk;
}

// ---------------------------------------------------------------- variety

int cmd_variety(const Config& cfg, const std::string& a_path, int sample, int m)
{
    const Tolerances tol = cfg.tolerances();
    const DeterminantalVariety v(read_matrix_file(a_path), tol);
    if (sample > 0) {
        std::ostringstream os;
        write_boundary_csv(os, boundary_sample(v, sample), tol);
        emit(cfg, os.str());
        return kExitOk;
    }
    const DistinguishedVerdict verdict = classify_distinguished(v, tol, m);
    json out;
    out["status"] = to_string(verdict.status);
    out["evidence"] = verdict.evidence;
    out["witness"] = verdict.witness ? point_json(*verdict.witness) : json(nullptr);
    out["nr"] = v.nr();
    out["delta"] = boundary_sample(v, m).delta();
    emit(cfg, dump_json(out));
    return kExitOk;
}

// ---------------------------------------------------------------- vn

// Gamma-contractions used by `vn --random`: symmetrized pairs, converse
// models, r-scaled pairs and unitary-part sums, in rotation.
OperatorPair corpus_pair(Rng& rng, int index, const Tolerances& tol)
{
    switch (index % 4) {
    case 0: return random_symmetrized_pair(rng, rng.integer(1, 4), tol);
    case 1: {
        const int k = rng.integer(1, 2);
        const int blocks = rng.integer(1, 3);
        return random_converse_pair(rng, k, blocks, rng.uniform(0.2, 1.0), tol);
    }
    case 2: {
        const int n = rng.integer(1, 4);
        return random_strict_pair(rng, n, rng.uniform(0.9, 1.0), tol);
    }
    default: {
        const int u = rng.integer(1, 2);
        return random_unitary_sum(rng, u, rng.integer(0, 3), tol);
    }
    }
}

int cmd_vn(const Config& cfg, const std::string& s_path, const std::string& p_path,
           const std::string& poly_path, int m, int random_count)
{
    const Tolerances tol = cfg.tolerances();
    if (random_count > 0) {
        Rng rng(cfg.seed);
        json reports = json::array();
        double min_ratio = 1e300;
        double max_ratio = 0.0;
        bool all_hold = true;
        for (int i = 0; i < random_count; ++i) {
            const OperatorPair pair = corpus_pair(rng, i, tol);
            const int k = rng.integer(1, 2);
            const MatrixPolynomial f = random_matrix_polynomial(rng, k, rng.integer(0, 3));
            const VNReport r = vn_report(f, pair, m, tol);
            min_ratio = std::min(min_ratio, r.ratio);
            max_ratio = std::max(max_ratio, r.ratio);
            all_hold = all_hold && r.holds;
            json entry = report_json(r);
            entry["instance"] = i;
            entry["dim"] = pair.dim();
            reports.push_back(entry);
        }
        json out = {{"seed", cfg.seed},
                    {"instances", random_count},
                    {"min_ratio", min_ratio},
                    {"max_ratio", max_ratio},
                    {"all_hold", all_hold},
                    {"reports", reports}};
        emit(cfg, dump_json(out));
        return all_hold ? kExitOk : kExitNegative;
    }
    if (s_path.empty() || p_path.empty()) {
        throw Error(ErrorKind::InvalidArgument, "vn needs S and P files, or --random k");
    }
    const OperatorPair pair = load_pair(s_path, p_path, tol);
    const MatrixPolynomial f = poly_path.empty()
                                   ? MatrixPolynomial::monomial(1, 0, Matrix::Identity(1, 1))
                                   : polynomial_from_json(read_json_file(poly_path));
    const VNReport r = vn_report(f, pair, m, tol);
    emit(cfg, dump_json(report_json(r)));
    return r.holds ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- model

int cmd_model(const Config& cfg, const std::string& s_path, const std::string& p_path, int blocks,
              int powers)
{
    const Tolerances tol = cfg.tolerances();
    const OperatorPair pair = load_pair(s_path, p_path, tol);
    const TruncatedModel model = build_model(pair, blocks, tol);
    const DilationReport rep = dilation_check(model, pair, powers, powers);
    const double limit = rep.bound() + 1e-10;
    const bool ok =
        rep.residual <= limit && rep.shift_intertwine <= limit && rep.s_intertwine <= limit;
    json out = {{"N", model.N},
                {"block", model.block},
                {"model_dim", model.T.rows()},
                {"tail", rep.tail},
                {"residual", rep.residual},
                {"shift_intertwine", rep.shift_intertwine},
                {"s_intertwine", rep.s_intertwine},
                {"constant", rep.constant},
                {"bound", rep.bound()},
                {"ok", ok}};
    emit(cfg, dump_json(out));
    if (!ok) {
        std::cerr << "dilation residual exceeds C * tail\n";
        return kExitInvariant;
    }
    return kExitOk;
}

// ---------------------------------------------------------------- gen

int cmd_gen(const Config& cfg, const std::string& kind, int dim, int count, double r,
            double radius, int blocks)
{
    const Tolerances tol = cfg.tolerances();
    if (dim < 1 || count < 1) {
        throw Error(ErrorKind::InvalidArgument, "--dim and --count must be positive");
    }
    Rng rng(cfg.seed);
    json items = json::array();
    for (int i = 0; i < count; ++i) {
        json item;
        if (kind == "polynomial") {
            item["f"] = polynomial_to_json(random_matrix_polynomial(rng, dim, 3));
            items.push_back(item);
            continue;
        }
        if (kind == "variety") {
            item["A"] = matrix_to_json(random_with_numerical_radius(rng, dim, radius, tol));
            items.push_back(item);
            continue;
        }
        OperatorPair pair = OperatorPair::make(Matrix::Zero(dim, dim), Matrix::Zero(dim, dim), tol);
        if (kind == "symmetrized") {
            pair = random_symmetrized_pair(rng, dim, tol);
        } else if (kind == "converse") {
            pair = random_converse_pair(rng, dim, blocks, radius, tol);
        } else if (kind == "strict") {
            if (!(r > 0.0 && r < 1.0)) {
                throw Error(ErrorKind::InvalidArgument, "--r must lie in (0, 1)");
            }
            pair = random_strict_pair(rng, dim, r, tol);
            const double c = strictness_constant(pair, tol);
            if (!is_strict(c, tol)) {
                std::cerr << "generated pair " << i << " has strictness constant " << c << "\n";
                return kExitInvariant;
            }
            item["strictness"] = c;
        } else if (kind == "pure") {
            pair = random_pure_pair(rng, dim, radius < 1.0 ? radius : 0.8, false, tol);
        } else {
            throw Error(ErrorKind::InvalidArgument, "unknown generator kind " + kind);
        }
        item["S"] = matrix_to_json(pair.S());
        item["P"] = matrix_to_json(pair.P());
        items.push_back(item);
    }
    json out = {{"kind", kind}, {"seed", cfg.seed}, {"items", items}};
    emit(cfg, dump_json(out));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Computations on the symmetrized bidisc"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--seed", cfg.seed, "Seed for every random draw")->capture_default_str();
    app.add_option("--tol-psd", cfg.tol.psd_tol, "PSD tolerance")->capture_default_str();
    app.add_option("--tol-residual", cfg.tol.residual_tol, "Residual tolerance")->capture_default_str();
    app.add_option("--grid-angular", cfg.tol.grid_angular, "Angular grid size")->capture_default_str();
    app.add_option("--grid-radial", cfg.tol.grid_radial, "Radial grid size")->capture_default_str();
    app.add_flag("--refine", cfg.refine, "Double the grids");
    app.add_option("--out", cfg.out, "Write the report here instead of stdout");

    std::string s_path, p_path, a_path, poly_path, kind = "symmetrized";
    int sample = 0, m = 1024, vn_m = 2048, random_count = 0, blocks = 8, powers = 3;
    int dim = 2, count = 1, gen_blocks = 3;
    double r = 0.9, radius = 1.0;

    auto* check = app.add_subcommand("check", "Gamma-contraction, strictness, isometry and purity verdicts");
    check->add_option("S", s_path, "S matrix file")->required();
    check->add_option("P", p_path, "P matrix file")->required();

    auto* fundop = app.add_subcommand("fundop", "Fundamental operator of a pair");
    fundop->add_option("S", s_path)->required();
    fundop->add_option("P", p_path)->required();

    auto* variety = app.add_subcommand("variety", "Classify det(A + pA^* - sI) = 0, or sample its boundary");
    variety->add_option("A", a_path)->required();
    variety->add_option("--sample", sample, "Write m boundary samples as CSV");
    variety->add_option("--angles", m, "Angles for the classification scan")->capture_default_str();

    auto* vn = app.add_subcommand("vn", "von Neumann inequality report");
    vn->add_option("S", s_path);
    vn->add_option("P", p_path);
    vn->add_option("--poly", poly_path, "Polynomial file (default f = s)");
    vn->add_option("--sample", vn_m, "Boundary samples")->capture_default_str();
    vn->add_option("--random", random_count, "Run k seeded random instances");

    auto* model = app.add_subcommand("model", "Truncated model and dilation residuals");
    model->add_option("S", s_path)->required();
    model->add_option("P", p_path)->required();
    model->add_option("--blocks", blocks, "Initial truncation level")->capture_default_str();
    model->add_option("--powers", powers, "Largest m, n in S^m P^n")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "Seeded generators");
    gen->add_option("kind", kind, "symmetrized | converse | strict | pure | variety | polynomial")
        ->capture_default_str();
    gen->add_option("--dim", dim, "Dimension (coefficient size for converse)")->capture_default_str();
    gen->add_option("--count", count)->capture_default_str();
    gen->add_option("--r", r, "Scale for strict pairs")->capture_default_str();
    gen->add_option("--radius", radius, "Numerical radius / spectral radius bound")->capture_default_str();
    gen->add_option("--blocks", gen_blocks)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        cfg.tol.validate();
        if (*check) return cmd_check(cfg, s_path, p_path);
        if (*fundop) return cmd_fundop(cfg, s_path, p_path);
        if (*variety) return cmd_variety(cfg, a_path, sample, m);
        if (*vn) return cmd_vn(cfg, s_path, p_path, poly_path, vn_m, random_count);
        if (*model) return cmd_model(cfg, s_path, p_path, blocks, powers);
        if (*gen) return cmd_gen(cfg, kind, dim, count, r, radius, gen_blocks);
    } catch (const Error& e) {
        std::cerr << "symbidisc: " << e.what() << "\n";
        switch (e.kind()) {
        case ErrorKind::InvariantViolation:
        case ErrorKind::VerificationFailed:
            return kExitInvariant;
        default:
            return kExitInput;
        }
    } catch (const std::exception& e) {
        std::cerr << "symbidisc: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
