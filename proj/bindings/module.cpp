#include "loewner/cli.hpp"
#include "loewner/matrix_io.hpp"
#include "loewner/random.hpp"
#include "loewner/report_io.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace loewner;

namespace {

ComplexMatrix matrix_from_array(const py::array_t<std::complex<double>> &array) {
    const py::buffer_info info = array.request();
    if (info.ndim != 2 || info.shape[0] != info.shape[1])
        throw std::invalid_argument("expected a square 2-D array");
    const int n = static_cast<int>(info.shape[0]);
    const auto strides0 = info.strides[0] / static_cast<py::ssize_t>(sizeof(std::complex<double>));
    const auto strides1 = info.strides[1] / static_cast<py::ssize_t>(sizeof(std::complex<double>));
    const auto *data = static_cast<const std::complex<double> *>(info.ptr);
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = data[i * strides0 + j * strides1];
    return m;
}

py::array_t<std::complex<double>> matrix_to_array(const ComplexMatrix &m) {
    const int n = m.dim();
    py::array_t<std::complex<double>> out({n, n});
    auto buf = out.mutable_unchecked<2>();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            buf(i, j) = m(i, j);
    return out;
}

HermitianMatrix hermitian_from_array(const py::array_t<std::complex<double>> &array) {
    return HermitianMatrix(matrix_from_array(array));
}

std::vector<HermitianMatrix> hermitian_list(const std::vector<py::array_t<std::complex<double>>> &arrays) {
    std::vector<HermitianMatrix> out;
    out.reserve(arrays.size());
    for (const auto &a : arrays)
        out.push_back(hermitian_from_array(a));
    return out;
}

py::dict report_to_dict(const IneqReport &r) {
    py::dict w;
    w["seed"] = r.witness.seed;
    w["dim"] = r.witness.dim;
    w["functions"] = r.witness.functions;
    w["params"] = r.witness.params;
    w["norm"] = r.witness.norm;
    py::dict d;
    d["check_id"] = r.check_id;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["margin"] = r.margin;
    d["pass"] = r.pass;
    d["expected_fail"] = r.expected_fail;
    if (!r.error.empty())
        d["error"] = r.error;
    d["witness"] = std::move(w);
    return d;
}

SweepConfig config_from_kwargs(const py::dict &kwargs) {
    SweepConfig cfg;
    if (kwargs.contains("dims"))
        cfg.dims = kwargs["dims"].cast<std::vector<int>>();
    if (kwargs.contains("samples"))
        cfg.samples = kwargs["samples"].cast<int>();
    if (kwargs.contains("seed"))
        cfg.seed = kwargs["seed"].cast<uint64_t>();
    if (kwargs.contains("functions"))
        cfg.functions = kwargs["functions"].cast<std::vector<std::string>>();
    if (kwargs.contains("norms")) {
        cfg.norms.clear();
        for (const auto &item : kwargs["norms"].cast<std::vector<std::string>>())
            cfg.norms.push_back(NormKind::parse(item));
    }
    if (kwargs.contains("nu"))
        cfg.nu_grid = kwargs["nu"].cast<std::vector<double>>();
    if (kwargs.contains("spectrum_lo"))
        cfg.spectrum_lo = kwargs["spectrum_lo"].cast<double>();
    if (kwargs.contains("spectrum_hi"))
        cfg.spectrum_hi = kwargs["spectrum_hi"].cast<double>();
    if (kwargs.contains("direction_samples"))
        cfg.direction_samples = kwargs["direction_samples"].cast<int>();
    return cfg;
}

HHMode parse_hh_mode(const std::string &mode) {
    if (mode == "convex")
        return HHMode::Convex;
    if (mode == "quasiconvex")
        return HHMode::QuasiConvex;
    if (mode == "sconvex")
        return HHMode::SConvex;
    throw std::invalid_argument("unknown mode \"" + mode + "\"");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Matrix-function calculus, unitarily invariant norms, and norm-inequality checkers";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    m.def(
        "eig_hermitian",
        [](const py::array_t<std::complex<double>> &a) {
            const SpectralDecomposition d = eig_hermitian(hermitian_from_array(a));
            return py::make_tuple(py::array_t<double>(py::cast(d.eigenvalues)),
                                  matrix_to_array(d.unitary));
        },
        py::arg("a"), "Ascending eigenvalues and the unitary eigenvector matrix.");

    m.def(
        "is_positive_definite",
        [](const py::array_t<std::complex<double>> &a, std::optional<double> floor) {
            const HermitianMatrix h = hermitian_from_array(a);
            return floor ? is_positive_definite(h, *floor) : is_positive_definite(h);
        },
        py::arg("a"), py::arg("floor") = std::nullopt);

    m.def(
        "random_pd",
        [](int dim, double lo, double hi, uint64_t seed) {
            return matrix_to_array(random_pd(dim, lo, hi, seed).matrix());
        },
        py::arg("dim"), py::arg("lambda_lo"), py::arg("lambda_hi"), py::arg("seed"));

    m.def(
        "schur_product",
        [](const py::array_t<std::complex<double>> &x, const py::array_t<std::complex<double>> &y) {
            return matrix_to_array(schur_product(matrix_from_array(x), matrix_from_array(y)));
        },
        py::arg("x"), py::arg("y"));

    m.def(
        "norm",
        [](const py::array_t<std::complex<double>> &x, const std::string &kind) {
            return norm(matrix_from_array(x), NormKind::parse(kind));
        },
        py::arg("x"), py::arg("kind") = "op");

    m.def(
        "norm_identity",
        [](int dim, const std::string &kind) { return norm_identity(dim, NormKind::parse(kind)); },
        py::arg("dim"), py::arg("kind"));

    m.def(
        "fn_eval",
        [](const std::string &id, int order, double t) { return catalog_get(id).deriv(order, t); },
        py::arg("id"), py::arg("order"), py::arg("t"),
        "Scalar derivative of a catalog function (order 0 is the value).");

    m.def(
        "fn_info",
        [](const std::string &id) {
            const FunctionSpec f = catalog_get(id);
            py::dict d;
            d["id"] = f.id;
            d["domain_lo"] = f.domain_lo;
            d["operator_monotone"] = f.operator_monotone;
            d["norm_deriv_convex"] = f.norm_deriv_convex;
            if (f.s_convex_order)
                d["s_convex_order"] = *f.s_convex_order;
            d["has_measure"] = f.measure.has_value();
            return d;
        },
        py::arg("id"));

    m.def(
        "divided_difference",
        [](const std::string &id, const std::vector<double> &points) {
            return divided_difference(catalog_get(id), points);
        },
        py::arg("id"), py::arg("points"));

    m.def(
        "measure_derivative",
        [](const std::string &id, double t) { return measure_derivative(catalog_get(id), t); },
        py::arg("id"), py::arg("t"));

    m.def(
        "matrix_function",
        [](const std::string &id, const py::array_t<std::complex<double>> &a) {
            return matrix_to_array(matrix_function(catalog_get(id), hermitian_from_array(a)).matrix());
        },
        py::arg("id"), py::arg("a"));

    m.def(
        "frechet_derivative",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b) {
            return matrix_to_array(
                frechet_derivative(catalog_get(id), hermitian_from_array(a), hermitian_from_array(b))
                    .matrix());
        },
        py::arg("id"), py::arg("a"), py::arg("b"));

    m.def(
        "frechet_derivative_n",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const std::vector<py::array_t<std::complex<double>>> &dirs) {
            return matrix_to_array(
                frechet_derivative_n(catalog_get(id), hermitian_from_array(a), hermitian_list(dirs))
                    .matrix());
        },
        py::arg("id"), py::arg("a"), py::arg("directions"));

    m.def(
        "sample_multilinear_norm",
        [](const std::string &id, const py::array_t<std::complex<double>> &a, int n,
           const std::string &kind, int samples, uint64_t seed) {
            return sample_multilinear_norm(catalog_get(id), hermitian_from_array(a), n,
                                           NormKind::parse(kind), samples, seed);
        },
        py::arg("id"), py::arg("a"), py::arg("n"), py::arg("kind"), py::arg("samples"),
        py::arg("seed"));

    m.def(
        "commutator_map",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, const py::array_t<std::complex<double>> &x) {
            return matrix_to_array(commutator_map(catalog_get(id), hermitian_from_array(a),
                                                  hermitian_from_array(b), matrix_from_array(x)));
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("x"));

    m.def(
        "heinz_difference",
        [](const py::array_t<std::complex<double>> &a, const py::array_t<std::complex<double>> &b,
           const py::array_t<std::complex<double>> &x, double nu) {
            return matrix_to_array(
                heinz_difference(hermitian_from_array(a), hermitian_from_array(b),
                                 matrix_from_array(x), nu));
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("nu"));

    m.def(
        "weighted_power_difference",
        [](const py::array_t<std::complex<double>> &a, const py::array_t<std::complex<double>> &b,
           const py::array_t<std::complex<double>> &x, double nu) {
            return matrix_to_array(
                weighted_power_difference(hermitian_from_array(a), hermitian_from_array(b),
                                          matrix_from_array(x), nu));
        },
        py::arg("a"), py::arg("b"), py::arg("x"), py::arg("nu"));

    m.def(
        "hh_integral",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, double tol) {
            const SegmentIntegralResult r =
                hh_integral(catalog_get(id), hermitian_from_array(a), hermitian_from_array(b), tol);
            return py::make_tuple(matrix_to_array(r.value.matrix()), r.refinement_levels,
                                  r.est_error);
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

    m.def(
        "simpson_13",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b) {
            return matrix_to_array(
                simpson_13(catalog_get(id), hermitian_from_array(a), hermitian_from_array(b))
                    .matrix());
        },
        py::arg("id"), py::arg("a"), py::arg("b"));

    m.def(
        "simpson_38",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b) {
            return matrix_to_array(
                simpson_38(catalog_get(id), hermitian_from_array(a), hermitian_from_array(b))
                    .matrix());
        },
        py::arg("id"), py::arg("a"), py::arg("b"));

    m.def(
        "weight_moments",
        [](double nu, double s) {
            const WeightMoments m = weight_moments(nu, s);
            py::dict d;
            d["m0"] = m.m0;
            d["m1"] = m.m1;
            d["m1c"] = m.m1c;
            d["ms"] = m.ms;
            d["msc"] = m.msc;
            return d;
        },
        py::arg("nu"), py::arg("s") = 1.0);

    m.def(
        "mean_defect_residual",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, double nu, double tol) {
            return mean_defect_residual(catalog_get(id), hermitian_from_array(a),
                                   hermitian_from_array(b), nu, tol);
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("tol") = 1e-9);

    m.def(
        "check_quasiconvex_fn_norm",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, double nu, int n, bool expect_fail) {
            return report_to_dict(check_quasiconvex_fn_norm(
                catalog_get(id), hermitian_from_array(a), hermitian_from_array(b), nu, n,
                expect_fail));
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("n"),
        py::arg("expect_fail") = false);

    m.def(
        "check_frechet_norm_bound",
        [](const std::string &id, const py::array_t<std::complex<double>> &a, int n,
           const std::string &kind, int samples, uint64_t seed) {
            return report_to_dict(check_frechet_norm_bound(catalog_get(id), hermitian_from_array(a),
                                                           n, NormKind::parse(kind), samples, seed));
        },
        py::arg("id"), py::arg("a"), py::arg("n"), py::arg("kind"), py::arg("samples"),
        py::arg("seed"));

    m.def(
        "check_hh_weighted",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, double nu, const std::string &mode, double s,
           const std::string &kind) {
            return report_to_dict(check_hh_weighted(catalog_get(id), hermitian_from_array(a),
                                                    hermitian_from_array(b), nu,
                                                    parse_hh_mode(mode), s, NormKind::parse(kind)));
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("nu"), py::arg("mode"),
        py::arg("s") = 1.0, py::arg("kind") = "op");

    m.def(
        "check_simpson",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, const std::string &rule,
           const std::string &kind) {
            SimpsonRule r;
            if (rule == "onethird")
                r = SimpsonRule::OneThird;
            else if (rule == "threeeighth")
                r = SimpsonRule::ThreeEighth;
            else
                throw std::invalid_argument("rule must be onethird or threeeighth");
            return report_to_dict(check_simpson(catalog_get(id), hermitian_from_array(a),
                                                hermitian_from_array(b), r, NormKind::parse(kind)));
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("rule"), py::arg("kind") = "op");

    m.def(
        "check_product_hh",
        [](const std::string &f_id, const std::string &g_id,
           const py::array_t<std::complex<double>> &a, const py::array_t<std::complex<double>> &b,
           double nu, const std::string &kind) {
            return report_to_dict(check_product_hh(catalog_get(f_id), catalog_get(g_id),
                                                   hermitian_from_array(a),
                                                   hermitian_from_array(b), nu,
                                                   NormKind::parse(kind)));
        },
        py::arg("f"), py::arg("g"), py::arg("a"), py::arg("b"), py::arg("nu"),
        py::arg("kind") = "op");

    m.def(
        "check_product_perturbation",
        [](const std::string &f_id, const std::string &g_id,
           const py::array_t<std::complex<double>> &a, const py::array_t<std::complex<double>> &b,
           const std::string &kind) {
            return report_to_dict(check_product_perturbation(
                catalog_get(f_id), catalog_get(g_id), hermitian_from_array(a),
                hermitian_from_array(b), NormKind::parse(kind)));
        },
        py::arg("f"), py::arg("g"), py::arg("a"), py::arg("b"), py::arg("kind") = "op");

    m.def(
        "check_perturbation",
        [](const std::string &id, const py::array_t<std::complex<double>> &a,
           const py::array_t<std::complex<double>> &b, const std::string &mode, double s,
           const std::string &kind) {
            PerturbMode m_;
            if (mode == "convex")
                m_ = PerturbMode::Convex;
            else if (mode == "quasiconvex")
                m_ = PerturbMode::QuasiConvex;
            else if (mode == "sconvex")
                m_ = PerturbMode::SConvex;
            else if (mode == "refinement")
                m_ = PerturbMode::Refinement;
            else
                throw std::invalid_argument("unknown mode \"" + mode + "\"");
            return report_to_dict(check_perturbation(catalog_get(id), hermitian_from_array(a),
                                                     hermitian_from_array(b), m_, s,
                                                     NormKind::parse(kind)));
        },
        py::arg("id"), py::arg("a"), py::arg("b"), py::arg("mode"), py::arg("s") = 1.0,
        py::arg("kind") = "op");

    m.def(
        "check_commutator_bounds",
        [](const py::object &f_id, const py::object &g_id,
           const py::array_t<std::complex<double>> &a, const py::array_t<std::complex<double>> &b,
           const py::array_t<std::complex<double>> &x, const std::string &kind,
           const std::string &variant, double nu, double r, double alpha) {
            CommutatorVariant v;
            if (variant == "product")
                v = CommutatorVariant::Product;
            else if (variant == "function")
                v = CommutatorVariant::Function;
            else if (variant == "heinz")
                v = CommutatorVariant::Heinz;
            else if (variant == "kapil_power")
                v = CommutatorVariant::KapilPower;
            else if (variant == "kapil_weighted")
                v = CommutatorVariant::KapilWeighted;
            else if (variant == "power_lower")
                v = CommutatorVariant::PowerLowerBound;
            else
                throw std::invalid_argument("unknown variant \"" + variant + "\"");
            std::optional<FunctionSpec> f, g;
            if (!f_id.is_none())
                f = catalog_get(f_id.cast<std::string>());
            if (!g_id.is_none())
                g = catalog_get(g_id.cast<std::string>());
            CommutatorParams params;
            params.nu = nu;
            params.r = r;
            params.alpha = alpha;
            return report_to_dict(check_commutator_bounds(f, g, hermitian_from_array(a),
                                                          hermitian_from_array(b),
                                                          matrix_from_array(x),
                                                          NormKind::parse(kind), v, params));
        },
        py::arg("f"), py::arg("g"), py::arg("a"), py::arg("b"), py::arg("x"),
        py::arg("kind") = "op", py::arg("variant") = "heinz", py::arg("nu") = 0.5,
        py::arg("r") = 0.5, py::arg("alpha") = 1.0);

    m.def(
        "run_sweep",
        [](const py::kwargs &kwargs) {
            const SweepConfig cfg = config_from_kwargs(kwargs);
            const std::vector<IneqReport> reports = run_sweep(cfg);
            py::list out;
            for (const auto &r : reports)
                out.append(report_to_dict(r));
            return out;
        },
        "Run the inequality sweep; keyword arguments override config defaults.");

    m.def(
        "read_matrix",
        [](const std::string &path) { return matrix_to_array(read_matrix(path)); },
        py::arg("path"));

    m.def(
        "write_matrix",
        [](const std::string &path, const py::array_t<std::complex<double>> &m) {
            write_matrix(path, matrix_from_array(m));
        },
        py::arg("path"), py::arg("m"));
}
