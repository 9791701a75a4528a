#include "loewner/cli.hpp"

#include "loewner/matrix_io.hpp"
#include "loewner/report_io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace loewner {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void write_document(const std::string &out, const ordered_json &doc) {
    if (out.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::ofstream file(out);
    if (!file)
        throw std::invalid_argument(out + ": cannot open for writing");
    file << doc.dump(2) << '\n';
}

std::vector<double> parse_double_list(const std::string &csv, const char *what) {
    std::vector<double> values;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        try {
            size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size())
                throw std::invalid_argument(token);
        } catch (const std::exception &) {
            throw std::invalid_argument(std::string(what) + ": bad number \"" + token + "\"");
        }
    }
    if (values.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return values;
}

std::vector<int> parse_int_list(const std::string &csv, const char *what) {
    std::vector<int> values;
    for (double v : parse_double_list(csv, what)) {
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw std::invalid_argument(std::string(what) + ": expected integers");
        values.push_back(i);
    }
    return values;
}

int classify_exception() {
    try {
        throw;
    } catch (const DomainError &e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const ConvergenceError &e) {
        std::cerr << "convergence error: " << e.what() << '\n';
        return kExitNoConvergence;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

struct PerturbModeInfo {
    PerturbMode mode;
    const char *name;
};

constexpr PerturbModeInfo kPerturbModes[] = {
    {PerturbMode::Convex, "convex"},
    {PerturbMode::QuasiConvex, "quasiconvex"},
    {PerturbMode::SConvex, "sconvex"},
    {PerturbMode::Refinement, "refinement"},
};

bool perturb_mode_applicable(const FunctionSpec &spec, PerturbMode mode, const NormKind &kind) {
    switch (mode) {
    case PerturbMode::Convex:
        return spec.norm_deriv_convex && kind.tag == NormTag::Operator;
    case PerturbMode::QuasiConvex:
        return spec.operator_monotone ||
               (spec.norm_deriv_convex && kind.tag == NormTag::Operator);
    case PerturbMode::SConvex:
        return spec.s_convex_order.has_value() && kind.tag == NormTag::Operator;
    case PerturbMode::Refinement:
        return spec.operator_monotone;
    }
    return false;
}

} // namespace

int run_bound(const BoundOptions &options) {
    try {
        const FunctionSpec spec = catalog_get(options.function);
        const HermitianMatrix a(read_matrix(options.a_path));
        const HermitianMatrix b(read_matrix(options.b_path));
        const std::vector<NormKind> kinds = parse_norm_list(options.norms);

        bool mode_known = options.mode == "all";
        for (const auto &info : kPerturbModes)
            mode_known = mode_known || options.mode == info.name;
        if (!mode_known)
            throw std::invalid_argument("unknown mode \"" + options.mode +
                                        "\" (want all|convex|quasiconvex|sconvex|refinement)");

        ordered_json doc;
        doc["command"] = "bound";
        doc["function"] = spec.id;
        doc["A"] = options.a_path;
        doc["B"] = options.b_path;
        ordered_json results = ordered_json::array();
        bool any_emitted = false;
        bool any_failed = false;
        for (const NormKind &kind : kinds) {
            const double lhs =
                norm(matrix_function(spec, b).matrix() - matrix_function(spec, a).matrix(), kind);
            ordered_json entry;
            entry["norm"] = kind.str();
            entry["lhs"] = lhs;
            ordered_json bounds = ordered_json::array();
            for (const auto &info : kPerturbModes) {
                if (options.mode != "all" && options.mode != info.name)
                    continue;
                if (!perturb_mode_applicable(spec, info.mode, kind))
                    continue;
                const double s = spec.s_convex_order.value_or(1.0);
                const IneqReport r = check_perturbation(spec, a, b, info.mode, s, kind);
                ordered_json bj;
                bj["mode"] = info.name;
                bj["check_id"] = r.check_id;
                bj["lhs"] = r.lhs;
                bj["rhs"] = r.rhs;
                bj["margin"] = r.margin;
                bj["pass"] = r.pass;
                for (const auto &[key, value] : r.witness.params)
                    bj[key] = value;
                bounds.push_back(std::move(bj));
                any_emitted = true;
                any_failed = any_failed || !r.pass;
            }
            entry["bounds"] = std::move(bounds);
            results.push_back(std::move(entry));
        }
        if (!any_emitted)
            throw std::invalid_argument("mode \"" + options.mode + "\" is not applicable to \"" +
                                        spec.id + "\" with the requested norms");
        doc["results"] = std::move(results);
        write_document(options.out, doc);
        return any_failed ? kExitUnexpectedFailure : kExitOk;
    } catch (...) {
        return classify_exception();
    }
}

int run_quadrature(const QuadratureOptions &options) {
    try {
        const FunctionSpec spec = catalog_get(options.function);
        if (!spec.operator_monotone)
            throw std::invalid_argument("quadrature error bounds require an operator monotone "
                                        "function, got \"" +
                                        spec.id + "\"");
        const HermitianMatrix a(read_matrix(options.a_path));
        const HermitianMatrix b(read_matrix(options.b_path));
        const std::vector<NormKind> kinds = parse_norm_list(options.norms);
        if (!(options.tol > 0.0))
            throw std::invalid_argument("tolerance must be positive");

        const SegmentIntegralResult reference = hh_integral(spec, a, b, options.tol);
        const auto eig_a = eig_hermitian(a).eigenvalues;
        const auto eig_b = eig_hermitian(b).eigenvalues;
        const double deriv_max =
            std::max(op_norm_fn_deriv(spec, 1, eig_a), op_norm_fn_deriv(spec, 1, eig_b));

        ordered_json doc;
        doc["command"] = "quadrature";
        doc["function"] = spec.id;
        doc["A"] = options.a_path;
        doc["B"] = options.b_path;
        doc["tol"] = options.tol;
        doc["reference"] = matrix_to_json(reference.value.matrix());
        doc["refinement_levels"] = reference.refinement_levels;
        doc["est_error"] = reference.est_error;

        struct Rule {
            const char *name;
            HermitianMatrix estimate;
            double constant;
        };
        const Rule rules[] = {
            {"simpson_13", simpson_13(spec, a, b), 5.0 / 32.0},
            {"simpson_38", simpson_38(spec, a, b), 25.0 / 288.0},
        };
        ordered_json rules_json = ordered_json::array();
        for (const Rule &rule : rules) {
            ordered_json rj;
            rj["rule"] = rule.name;
            rj["constant"] = rule.constant;
            rj["estimate"] = matrix_to_json(rule.estimate.matrix());
            ordered_json norms_json = ordered_json::array();
            for (const NormKind &kind : kinds) {
                const double empirical = norm(rule.estimate.matrix() - reference.value.matrix(), kind);
                const double bound = rule.constant * norm(b - a, kind) * deriv_max;
                ordered_json nj;
                nj["norm"] = kind.str();
                nj["empirical"] = empirical;
                nj["bound"] = bound;
                if (bound > 0.0)
                    nj["ratio"] = empirical / bound;
                else
                    nj["ratio"] = nullptr;
                norms_json.push_back(std::move(nj));
            }
            rj["norms"] = std::move(norms_json);
            rules_json.push_back(std::move(rj));
        }
        doc["rules"] = std::move(rules_json);
        write_document(options.out, doc);
        return kExitOk;
    } catch (...) {
        return classify_exception();
    }
}

int run_verify(const VerifyOptions &options) {
    try {
        SweepConfig config;
        if (!options.config_path.empty()) {
            std::ifstream in(options.config_path);
            if (!in)
                throw std::invalid_argument(options.config_path + ": cannot open for reading");
            json j;
            try {
                in >> j;
            } catch (const json::parse_error &e) {
                throw std::invalid_argument(options.config_path + ": invalid JSON (" + e.what() +
                                            ")");
            }
            config = sweep_config_from_json(j, config);
        }
        if (options.dims)
            config.dims = parse_int_list(*options.dims, "--dims");
        if (options.samples)
            config.samples = *options.samples;
        if (options.seed)
            config.seed = *options.seed;
        if (options.functions)
            config.functions = parse_function_list(*options.functions);
        if (options.norms)
            config.norms = parse_norm_list(*options.norms);
        if (options.nu)
            config.nu_grid = parse_double_list(*options.nu, "--nu");
        if (options.spectrum_lo)
            config.spectrum_lo = *options.spectrum_lo;
        if (options.spectrum_hi)
            config.spectrum_hi = *options.spectrum_hi;
        if (options.direction_samples)
            config.direction_samples = *options.direction_samples;
        validate(config);

        const std::vector<IneqReport> reports = run_sweep(config);
        const SweepSummary summary = summarize(reports);

        ordered_json doc;
        doc["command"] = "verify";
        doc["config"] = sweep_config_to_json(config);
        doc["summary"] = summary_to_json(summary);
        doc["reports"] = reports_to_json(reports);
        write_document(options.out, doc);

        if (summary.unexpected > 0) {
            std::cerr << "verify: " << summary.unexpected << " unexpected failure(s) out of "
                      << summary.total() << " checks\n";
            return kExitUnexpectedFailure;
        }
        return kExitOk;
    } catch (...) {
        return classify_exception();
    }
}

} // namespace loewner
