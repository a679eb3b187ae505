// Python bindings for the core operations: matrix means, spectral
// eigendecomposition, Loewner margins, the scalar constants, seeded instance
// generation, and the inequality suite (returned as a JSON string).

#include "sgmean/checks.hpp"
#include "sgmean/constants.hpp"
#include "sgmean/instance_gen.hpp"
#include "sgmean/matrix_function.hpp"
#include "sgmean/means.hpp"
#include "sgmean/report.hpp"

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;

namespace {

sgmean::SymMatrix to_sym(const py::array_t<double, py::array::c_style | py::array::forcecast>& arr) {
    if (arr.ndim() != 2 || arr.shape(0) != arr.shape(1))
        throw py::value_error("expected a square 2-d array");
    const int n = static_cast<int>(arr.shape(0));
    sgmean::Matrix m(n, n);
    auto r = arr.unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = r(i, j);
    return sgmean::SymMatrix::symmetrized(m);
}

py::array_t<double> from_matrix(const sgmean::Matrix& m) {
    py::array_t<double> arr({m.rows(), m.cols()});
    auto w = arr.mutable_unchecked<2>();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
    return arr;
}

py::array_t<double> from_sym(const sgmean::SymMatrix& s) { return from_matrix(s.mat()); }

using NpArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "matrix means, Kantorovich constants, and inequality verification";

    m.def("eigh", [](const NpArray& a) {
        const sgmean::EigenDecomp ed = sgmean::eigh(to_sym(a));
        return py::make_tuple(py::cast(ed.values), from_matrix(ed.vectors));
    }, py::arg("a"), "eigenvalues (ascending) and orthonormal eigenvectors");

    m.def("matrix_power",
          [](const NpArray& a, double p) { return from_sym(sgmean::matrix_power(to_sym(a), p)); },
          py::arg("a"), py::arg("p"));

    m.def("loewner_margin", [](const NpArray& lhs, const NpArray& rhs) {
        return sgmean::loewner_margin(to_sym(lhs), to_sym(rhs));
    }, py::arg("lhs"), py::arg("rhs"),
          "smallest eigenvalue of rhs - lhs; >= 0 means lhs <= rhs");

    m.def("arithmetic_mean", [](const NpArray& a, const NpArray& b, double t) {
        return from_sym(sgmean::arithmetic_mean(to_sym(a), to_sym(b), sgmean::Weight(t)));
    }, py::arg("a"), py::arg("b"), py::arg("t"));

    m.def("harmonic_mean", [](const NpArray& a, const NpArray& b, double t) {
        return from_sym(sgmean::harmonic_mean(to_sym(a), to_sym(b), sgmean::Weight(t)));
    }, py::arg("a"), py::arg("b"), py::arg("t"));

    m.def("geometric_mean", [](const NpArray& a, const NpArray& b, double t) {
        return from_sym(sgmean::geometric_mean(to_sym(a), to_sym(b), sgmean::Weight(t)));
    }, py::arg("a"), py::arg("b"), py::arg("t"));

    m.def("spectral_geometric_mean", [](const NpArray& a, const NpArray& b, double t) {
        return from_sym(
            sgmean::spectral_geometric_mean(to_sym(a), to_sym(b), sgmean::Weight(t)));
    }, py::arg("a"), py::arg("b"), py::arg("t"));

    m.def("spectral_residual", [](const NpArray& a, const NpArray& b, double t) {
        return sgmean::spectral_residual(to_sym(a), to_sym(b), sgmean::Weight(t));
    }, py::arg("a"), py::arg("b"), py::arg("t"),
          "defect of the fixed-point equation characterizing the spectral mean");

    m.def("kantorovich_x",
          [](double x, double t) { return sgmean::kantorovich(x, t); },
          py::arg("x"), py::arg("t"), "generalized Kantorovich constant K(x, t)");
    m.def("kantorovich_mm",
          [](double lo, double hi, double t) { return sgmean::kantorovich(lo, hi, t); },
          py::arg("m"), py::arg("M"), py::arg("t"), "two-parameter form K(m, M, t)");
    m.def("kantorovich_lower", &sgmean::kantorovich_lower, py::arg("x"), py::arg("t"));
    m.def("kantorovich_dx", &sgmean::kantorovich_dx, py::arg("x"), py::arg("t"));
    m.def("kappa_order_gap", &sgmean::kappa_order_gap, py::arg("x"), py::arg("t"));
    m.def("kappa1", &sgmean::kappa1, py::arg("m"), py::arg("M"), py::arg("r"), py::arg("t"));
    m.def("kappa2", &sgmean::kappa2, py::arg("m"), py::arg("M"), py::arg("r"), py::arg("t"));

    m.def("scalar_mean", [](double lo, double hi, double lam, const std::string& kind) {
        sgmean::ScalarMeanKind k;
        if (kind == "arith") k = sgmean::ScalarMeanKind::Arithmetic;
        else if (kind == "geo") k = sgmean::ScalarMeanKind::Geometric;
        else if (kind == "harm") k = sgmean::ScalarMeanKind::Harmonic;
        else throw py::value_error("kind must be 'arith', 'geo' or 'harm'");
        return sgmean::scalar_mean(lo, hi, lam, k);
    }, py::arg("m"), py::arg("M"), py::arg("lam"), py::arg("kind"));

    m.def("bundle", [](double lo, double hi, double t, std::optional<double> r) {
        const sgmean::ConstantsBundle b =
            sgmean::make_bundle(lo, hi, sgmean::Weight(t), r);
        py::dict d;
        d["m"] = b.m;
        d["M"] = b.M;
        d["t"] = b.t;
        d["lambda"] = b.lambda;
        d["k"] = b.k;
        d["k_ratio"] = b.k_ratio;
        d["k_sqrt_ratio"] = b.k_sqrt_ratio;
        d["xi"] = b.xi;
        d["c1"] = b.c1;
        d["c2"] = b.c2;
        d["k2"] = b.k2;
        d["beta"] = b.beta;
        d["eta"] = b.eta;
        d["gamma"] = b.gamma;
        if (b.r) {
            d["r"] = *b.r;
            d["kappa1"] = *b.kappa1;
            d["kappa2"] = *b.kappa2;
        }
        return d;
    }, py::arg("m"), py::arg("M"), py::arg("t"), py::arg("r") = py::none(),
          "all scalar constants for one (m, M, t[, r])");

    m.def("random_pd", [](uint64_t seed, int dim, double lo, double hi, bool pinned) {
        sgmean::GenConfig cfg;
        cfg.seed = seed;
        cfg.dim = dim;
        cfg.bounds = sgmean::SpectrumBounds(lo, hi);
        cfg.mode = pinned ? sgmean::SpectrumMode::PinnedEndpoints
                          : sgmean::SpectrumMode::Interior;
        return from_sym(sgmean::random_pd(cfg));
    }, py::arg("seed"), py::arg("dim"), py::arg("m"), py::arg("M"),
          py::arg("pinned") = true,
          "seeded positive definite matrix with spectrum in [m, M]");

    m.def("run_suite", [](uint64_t seed, int trials, std::vector<int> dims, double tol,
                          int falsification_trials) {
        sgmean::SuiteConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        if (!dims.empty()) cfg.dims = std::move(dims);
        cfg.tol = tol;
        cfg.falsification_trials = falsification_trials;
        return sgmean::report_to_json(sgmean::run_suite(cfg));
    }, py::arg("seed") = 42, py::arg("trials") = 200,
          py::arg("dims") = std::vector<int>{}, py::arg("tol") = 1e-8,
          py::arg("falsification_trials") = 200,
          "run the inequality suite; returns the JSON report as a string");

#ifdef SGMEAN_VERSION
    m.attr("__version__") = SGMEAN_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
