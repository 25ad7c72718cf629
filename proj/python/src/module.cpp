#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symbidisc/fundamental.hpp"
#include "symbidisc/gamma_pairs.hpp"
#include "symbidisc/geometry.hpp"
#include "symbidisc/model_theory.hpp"
#include "symbidisc/varieties.hpp"
#include "symbidisc/von_neumann.hpp"

namespace py = pybind11;
using namespace symbidisc;

namespace {

// Terms come in as (i, j, coeff) with coeff a square complex array.
MatrixPolynomial polynomial_from_terms(const std::vector<std::tuple<int, int, Matrix>>& terms)
{
    if (terms.empty()) {
        throw Error(ErrorKind::InvalidArgument, "polynomial needs at least one term");
    }
    MatrixPolynomial f(std::get<2>(terms.front()).rows());
    for (const auto& [i, j, c] : terms) {
        Matrix sum = c;
        if (i <= f.degree_s() && j <= f.degree_p()) {
            sum += f.coeff(i, j);
        }
        f.set(i, j, sum);
    }
    return f;
}

py::dict verdict_dict(const PairVerdict& v)
{
    py::dict d;
    d["is_member"] = v.is_member;
    d["margin"] = v.margin;
    d["witness_alpha"] = v.witness ? py::cast(v.witness->alpha) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Numerical operator theory on the symmetrized bidisc";

    py::register_exception<Error>(m, "SymbidiscError", PyExc_ValueError);

    py::class_<Tolerances>(m, "Tolerances")
        .def(py::init<>())
        .def_readwrite("psd_tol", &Tolerances::psd_tol)
        .def_readwrite("rank_tol", &Tolerances::rank_tol)
        .def_readwrite("residual_tol", &Tolerances::residual_tol)
        .def_readwrite("grid_angular", &Tolerances::grid_angular)
        .def_readwrite("grid_radial", &Tolerances::grid_radial)
        .def("refined", &Tolerances::refined);

    m.def("numerical_radius", &numerical_radius, py::arg("A"), py::arg("tol") = Tolerances{});

    m.def("symmetrize_point", [](cplx z1, cplx z2) {
        const GammaPoint pt = symmetrize_point(z1, z2);
        return std::make_pair(pt.s, pt.p);
    });
    m.def("point_roots", [](cplx s, cplx p) { return point_roots({s, p}); });
    m.def(
        "classify_point",
        [](cplx s, cplx p, const Tolerances& tol) { return std::string(to_string(classify_point({s, p}, tol))); },
        py::arg("s"), py::arg("p"), py::arg("tol") = Tolerances{});

    m.def(
        "rho_pencil", [](const Matrix& s, const Matrix& p) { return rho_pencil(s, p); },
        py::arg("S"), py::arg("P"));
    m.def(
        "check_gamma_contraction",
        [](const Matrix& s, const Matrix& p, const Tolerances& tol) {
            return verdict_dict(check_gamma_contraction(OperatorPair::make(s, p, tol), tol));
        },
        py::arg("S"), py::arg("P"), py::arg("tol") = Tolerances{});
    m.def(
        "strictness_constant",
        [](const Matrix& s, const Matrix& p, const Tolerances& tol) {
            return strictness_constant(OperatorPair::make(s, p, tol), tol);
        },
        py::arg("S"), py::arg("P"), py::arg("tol") = Tolerances{});
    m.def(
        "check_gamma_isometry",
        [](const Matrix& s, const Matrix& p, const Tolerances& tol) {
            return verdict_dict(check_gamma_isometry(OperatorPair::make(s, p, tol), tol));
        },
        py::arg("S"), py::arg("P"), py::arg("tol") = Tolerances{});
    m.def("check_pure", &check_pure, py::arg("P"), py::arg("tol") = Tolerances{});

    m.def(
        "solve_fundamental",
        [](const Matrix& s, const Matrix& p, const Tolerances& tol) {
            const FundamentalOperator f = solve_fundamental(OperatorPair::make(s, p, tol), tol);
            py::dict d;
            d["F"] = f.F;
            d["basis"] = f.basis;
            d["residual"] = f.residual;
            d["nr"] = f.nr;
            return d;
        },
        py::arg("S"), py::arg("P"), py::arg("tol") = Tolerances{});
    m.def(
        "truncated_model_from_F",
        [](const Matrix& fhat, int blocks, const Tolerances& tol) {
            const OperatorPair pair = truncated_model_from_F(fhat, blocks, tol);
            return std::make_pair(pair.S(), pair.P());
        },
        py::arg("Fhat"), py::arg("blocks"), py::arg("tol") = Tolerances{});

    m.def(
        "classify_distinguished",
        [](const Matrix& a, const Tolerances& tol, int samples) {
            const DistinguishedVerdict v = classify_distinguished(DeterminantalVariety(a, tol), tol, samples);
            py::dict d;
            d["status"] = std::string(to_string(v.status));
            d["evidence"] = v.evidence;
            d["witness"] = v.witness ? py::cast(std::make_pair(v.witness->s, v.witness->p)) : py::none();
            return d;
        },
        py::arg("A"), py::arg("tol") = Tolerances{}, py::arg("m") = 1024);
    m.def(
        "boundary_sample",
        [](const Matrix& a, int samples) {
            const BoundarySample bs = boundary_sample(DeterminantalVariety(a), samples);
            std::vector<std::tuple<double, cplx, cplx>> out;
            out.reserve(bs.points.size());
            for (const BoundaryPoint& bp : bs.points) {
                out.emplace_back(bp.theta, bp.pt.s, bp.pt.p);
            }
            return out;
        },
        py::arg("A"), py::arg("m"));
    m.def(
        "variety_membership",
        [](const Matrix& a, cplx s, cplx p, const Tolerances& tol) {
            return variety_membership(DeterminantalVariety(a, tol), {s, p}, tol);
        },
        py::arg("A"), py::arg("s"), py::arg("p"), py::arg("tol") = Tolerances{});
    m.def(
        "symmetrize_bidisc_variety",
        [](const Matrix& coeffs) { return symmetrize_bidisc_variety(BivarPolynomial(coeffs)).coeffs(); },
        py::arg("coeffs"), "q with q(z + w, zw) = p(z, w) p(w, z); coeffs[i, j] multiplies z^i w^j.");

    m.def(
        "lambda_matrix",
        [](const Matrix& s, const Matrix& p, const Tolerances& tol) {
            return lambda_matrix(OperatorPair::make(s, p, tol), tol).F;
        },
        py::arg("S"), py::arg("P"), py::arg("tol") = Tolerances{});
    m.def(
        "vn_report",
        [](const std::vector<std::tuple<int, int, Matrix>>& terms, const Matrix& s, const Matrix& p,
           int samples, const Tolerances& tol) {
            const VNReport r = vn_report(polynomial_from_terms(terms), OperatorPair::make(s, p, tol), samples, tol);
            py::dict d;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["ratio"] = r.ratio;
            d["holds"] = r.holds;
            d["m"] = r.m;
            d["argmax"] = py::make_tuple(r.argmax_theta, r.argmax.s, r.argmax.p);
            d["degenerate"] = r.degenerate;
            return d;
        },
        py::arg("terms"), py::arg("S"), py::arg("P"), py::arg("m") = 2048, py::arg("tol") = Tolerances{});

    m.def(
        "dilation_check",
        [](const Matrix& s, const Matrix& p, int blocks, int powers, const Tolerances& tol) {
            const OperatorPair pair = OperatorPair::make(s, p, tol);
            const TruncatedModel model = build_model(pair, blocks, tol);
            const DilationReport rep = dilation_check(model, pair, powers, powers);
            py::dict d;
            d["N"] = model.N;
            d["tail"] = rep.tail;
            d["residual"] = rep.residual;
            d["shift_intertwine"] = rep.shift_intertwine;
            d["s_intertwine"] = rep.s_intertwine;
            d["bound"] = rep.bound();
            return d;
        },
        py::arg("S"), py::arg("P"), py::arg("blocks") = 8, py::arg("powers") = 3,
        py::arg("tol") = Tolerances{});
}
