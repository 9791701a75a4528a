#include "loewner/checks.hpp"

#include "loewner/random.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace loewner {

namespace {

constexpr double kAlphaGrid[] = {1.0, 1.5, 2.0};

uint64_t fnv1a(const std::string &s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

void require_pd(const HermitianMatrix &m, const char *what) {
    if (!(lambda_min(m) > 0.0))
        throw DomainError(std::string(what) + ": argument must be positive definite");
}

double max_fn_norm(const FunctionSpec &spec, int order, const std::vector<double> &eig_a,
                   const std::vector<double> &eig_b) {
    return std::max(op_norm_fn_deriv(spec, order, eig_a), op_norm_fn_deriv(spec, order, eig_b));
}

ComplexMatrix plain_commutator(const HermitianMatrix &a, const HermitianMatrix &b,
                               const ComplexMatrix &x) {
    return a.matrix() * x - x * b.matrix();
}

Witness basic_witness(const FunctionSpec &spec, int dim, const NormKind &kind) {
    Witness w;
    w.dim = dim;
    w.functions = {spec.id};
    w.norm = kind.str();
    return w;
}

} // namespace

IneqReport make_report(std::string check_id, double lhs, double rhs, Witness witness,
                       bool expected_fail) {
    IneqReport r;
    r.check_id = std::move(check_id);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.pass = r.margin >= -1e-8 * (1.0 + std::abs(rhs));
    r.expected_fail = expected_fail;
    r.witness = std::move(witness);
    return r;
}

IneqReport check_quasiconvex_fn_norm(const FunctionSpec &spec, const HermitianMatrix &a,
                                     const HermitianMatrix &b, double nu, int n,
                                     bool expect_fail) {
    require_same_dim(a.matrix(), b.matrix(), "check_quasiconvex_fn_norm");
    if (n < 0 || n > 3)
        throw std::invalid_argument("check_quasiconvex_fn_norm needs n in 0..3");
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("check_quasiconvex_fn_norm needs nu in [0, 1]");
    if (!expect_fail) {
        if (n >= 1 && !spec.operator_monotone)
            throw std::invalid_argument("quasi-convexity of ||f^(n)(.)|| requires an operator "
                                        "monotone function (or expect_fail)");
        if (n == 0 && !spec.norm_fn_quasiconvex)
            throw std::invalid_argument("||f(.)|| is not declared quasi-convex for \"" + spec.id +
                                        "\" (or expect_fail)");
    }
    const HermitianMatrix mid = segment_point(a, b, nu);
    const double lhs = op_norm_fn_deriv(spec, n, eig_hermitian(mid).eigenvalues);
    const double rhs = max_fn_norm(spec, n, eig_hermitian(a).eigenvalues,
                                   eig_hermitian(b).eigenvalues);
    Witness w = basic_witness(spec, a.dim(), NormKind::operator_norm());
    w.params["nu"] = nu;
    w.params["n"] = n;
    return make_report("quasiconvex_fn_norm", lhs, rhs, std::move(w), expect_fail);
}

IneqReport check_frechet_norm_bound(const FunctionSpec &spec, const HermitianMatrix &a, int n,
                                    const NormKind &kind, int samples, uint64_t seed) {
    if (!spec.operator_monotone)
        throw std::invalid_argument("the Frechet norm bound requires an operator monotone function");
    const double lhs = sample_multilinear_norm(spec, a, n, kind, samples, seed);
    const double rhs = op_norm_fn_deriv(spec, n, eig_hermitian(a).eigenvalues);
    Witness w = basic_witness(spec, a.dim(), kind);
    w.seed = seed;
    w.params["n"] = n;
    w.params["samples"] = samples;
    return make_report("frechet_norm_bound", lhs, rhs, std::move(w));
}

namespace {

void gate_hh_mode(const FunctionSpec &spec, HHMode mode, double s, const NormKind &kind) {
    switch (mode) {
    case HHMode::Convex:
        if (!spec.norm_deriv_convex)
            throw std::invalid_argument("||f'(.)|| is not declared convex for \"" + spec.id + "\"");
        if (kind.tag != NormTag::Operator)
            throw std::invalid_argument("the convex-mode bound is an operator-norm statement");
        break;
    case HHMode::SConvex:
        if (!spec.s_convex_order)
            throw std::invalid_argument("||f'(.)|| is not declared s-convex for \"" + spec.id + "\"");
        if (std::abs(s - *spec.s_convex_order) > 1e-12)
            throw std::invalid_argument("s does not match the declared s-convex order of \"" +
                                        spec.id + "\"");
        if (kind.tag != NormTag::Operator)
            throw std::invalid_argument("the s-convex-mode bound is an operator-norm statement");
        break;
    case HHMode::QuasiConvex:
        if (kind.tag == NormTag::Operator) {
            if (!spec.operator_monotone && !spec.norm_deriv_convex)
                throw std::invalid_argument("||f'(.)|| is not declared quasi-convex for \"" +
                                            spec.id + "\"");
        } else if (!spec.operator_monotone) {
            throw std::invalid_argument(
                "the quasi-convex bound in a general unitarily invariant norm requires an "
                "operator monotone function");
        }
        break;
    }
}

IneqReport hh_weighted_core(const FunctionSpec &spec, const HermitianMatrix &a,
                            const HermitianMatrix &b, const ComplexMatrix &mean, double nu,
                            HHMode mode, double s, const NormKind &kind) {
    gate_hh_mode(spec, mode, s, kind);
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("check_hh_weighted needs nu in [0, 1]");

    const ComplexMatrix defect = Complex(nu, 0.0) * matrix_function(spec, a).matrix() +
                                 Complex(1.0 - nu, 0.0) * matrix_function(spec, b).matrix() - mean;
    const double lhs = norm(defect, kind);

    const auto eig_a = eig_hermitian(a).eigenvalues;
    const auto eig_b = eig_hermitian(b).eigenvalues;
    const double da = op_norm_fn_deriv(spec, 1, eig_a);
    const double db = op_norm_fn_deriv(spec, 1, eig_b);
    const HermitianMatrix diff = b - a;

    const WeightMoments m = weight_moments(nu, mode == HHMode::SConvex ? s : 1.0);
    double rhs = 0.0;
    std::string id;
    Witness w = basic_witness(spec, a.dim(), kind);
    w.params["nu"] = nu;
    switch (mode) {
    case HHMode::Convex:
        rhs = (m.m1c * da + m.m1 * db) * norm(diff, NormKind::operator_norm());
        id = "hh_convex";
        break;
    case HHMode::QuasiConvex:
        rhs = m.m0 * norm(diff, kind) * std::max(da, db);
        id = "hh_quasiconvex";
        break;
    case HHMode::SConvex:
        rhs = (m.msc * da + m.ms * db) * norm(diff, NormKind::operator_norm());
        id = "hh_sconvex";
        w.params["s"] = s;
        break;
    }
    return make_report(id, lhs, rhs, std::move(w));
}

IneqReport product_hh_core(const FunctionSpec &f, const FunctionSpec &g, const FunctionSpec &fg,
                           const HermitianMatrix &a, const HermitianMatrix &b,
                           const ComplexMatrix &mean, double nu, const NormKind &kind) {
    if (!f.operator_monotone || !g.operator_monotone)
        throw std::invalid_argument("the product bound requires two operator monotone functions");
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("check_product_hh needs nu in [0, 1]");

    const ComplexMatrix defect = Complex(nu, 0.0) * matrix_function(fg, a).matrix() +
                                 Complex(1.0 - nu, 0.0) * matrix_function(fg, b).matrix() - mean;
    const double lhs = norm(defect, kind);

    const auto eig_a = eig_hermitian(a).eigenvalues;
    const auto eig_b = eig_hermitian(b).eigenvalues;
    const double m0 = weight_moments(nu, 1.0).m0;
    const double rhs = m0 * norm(b - a, kind) *
                       (max_fn_norm(f, 1, eig_a, eig_b) * max_fn_norm(g, 0, eig_a, eig_b) +
                        max_fn_norm(f, 0, eig_a, eig_b) * max_fn_norm(g, 1, eig_a, eig_b));

    Witness w;
    w.dim = a.dim();
    w.functions = {f.id, g.id};
    w.norm = kind.str();
    w.params["nu"] = nu;
    return make_report("hh_product", lhs, rhs, std::move(w));
}

IneqReport simpson_core(const FunctionSpec &spec, const HermitianMatrix &a,
                        const HermitianMatrix &b, const ComplexMatrix &mean, SimpsonRule rule,
                        const NormKind &kind) {
    if (!spec.operator_monotone)
        throw std::invalid_argument("the Simpson bounds require an operator monotone function");
    const HermitianMatrix estimate =
        rule == SimpsonRule::OneThird ? simpson_13(spec, a, b) : simpson_38(spec, a, b);
    const double lhs = norm(estimate.matrix() - mean, kind);
    const double constant = rule == SimpsonRule::OneThird ? 5.0 / 32.0 : 25.0 / 288.0;
    const double rhs = constant * norm(b - a, kind) *
                       max_fn_norm(spec, 1, eig_hermitian(a).eigenvalues,
                                   eig_hermitian(b).eigenvalues);
    Witness w = basic_witness(spec, a.dim(), kind);
    w.params["C"] = constant;
    return make_report(rule == SimpsonRule::OneThird ? "simpson_13" : "simpson_38", lhs, rhs,
                       std::move(w));
}

} // namespace

IneqReport check_hh_weighted(const FunctionSpec &spec, const HermitianMatrix &a,
                             const HermitianMatrix &b, double nu, HHMode mode, double s,
                             const NormKind &kind) {
    gate_hh_mode(spec, mode, s, kind); // reject before paying for the integral
    const SegmentIntegralResult mean = hh_integral(spec, a, b);
    return hh_weighted_core(spec, a, b, mean.value.matrix(), nu, mode, s, kind);
}

IneqReport check_product_hh(const FunctionSpec &f, const FunctionSpec &g, const HermitianMatrix &a,
                            const HermitianMatrix &b, double nu, const NormKind &kind) {
    if (!f.operator_monotone || !g.operator_monotone)
        throw std::invalid_argument("the product bound requires two operator monotone functions");
    const FunctionSpec fg = product_function(f, g);
    const SegmentIntegralResult mean = hh_integral(fg, a, b);
    return product_hh_core(f, g, fg, a, b, mean.value.matrix(), nu, kind);
}

IneqReport check_product_perturbation(const FunctionSpec &f, const FunctionSpec &g,
                                      const HermitianMatrix &a, const HermitianMatrix &b,
                                      const NormKind &kind) {
    if (!f.operator_monotone || !g.operator_monotone)
        throw std::invalid_argument("the product bound requires two operator monotone functions");
    require_same_dim(a.matrix(), b.matrix(), "check_product_perturbation");
    const FunctionSpec fg = product_function(f, g);
    const double lhs =
        norm(matrix_function(fg, a).matrix() - matrix_function(fg, b).matrix(), kind);
    const auto eig_a = eig_hermitian(a).eigenvalues;
    const auto eig_b = eig_hermitian(b).eigenvalues;
    const double rhs = norm(b - a, kind) *
                       (max_fn_norm(f, 1, eig_a, eig_b) * max_fn_norm(g, 0, eig_a, eig_b) +
                        max_fn_norm(f, 0, eig_a, eig_b) * max_fn_norm(g, 1, eig_a, eig_b));
    Witness w;
    w.dim = a.dim();
    w.functions = {f.id, g.id};
    w.norm = kind.str();
    return make_report("perturb_product", lhs, rhs, std::move(w));
}

IneqReport check_commutator_bounds(const std::optional<FunctionSpec> &f,
                                   const std::optional<FunctionSpec> &g, const HermitianMatrix &a,
                                   const HermitianMatrix &b, const ComplexMatrix &x,
                                   const NormKind &kind, CommutatorVariant variant,
                                   const CommutatorParams &params) {
    require_same_dim(a.matrix(), x, "check_commutator_bounds");
    require_same_dim(b.matrix(), x, "check_commutator_bounds");
    require_pd(a, "check_commutator_bounds");
    require_pd(b, "check_commutator_bounds");

    const auto eig_a = eig_hermitian(a).eigenvalues;
    const auto eig_b = eig_hermitian(b).eigenvalues;
    const ComplexMatrix base_comm = plain_commutator(a, b, x);

    Witness w;
    w.dim = a.dim();
    w.norm = kind.str();

    double lhs = 0.0, rhs = 0.0;
    std::string id;
    switch (variant) {
    case CommutatorVariant::Product: {
        if (!f || !g)
            throw std::invalid_argument("the product variant needs two function specs");
        if (!f->operator_monotone || !g->operator_monotone)
            throw std::invalid_argument("the product variant requires operator monotone functions");
        const FunctionSpec fg = product_function(*f, *g);
        lhs = norm(commutator_map(fg, a, b, x), kind);
        rhs = norm(base_comm, kind) *
              (max_fn_norm(*f, 1, eig_a, eig_b) * max_fn_norm(*g, 0, eig_a, eig_b) +
               max_fn_norm(*f, 0, eig_a, eig_b) * max_fn_norm(*g, 1, eig_a, eig_b));
        w.functions = {f->id, g->id};
        id = "comm_product";
        break;
    }
    case CommutatorVariant::Function: {
        if (!f)
            throw std::invalid_argument("the function variant needs a function spec");
        if (!f->operator_monotone)
            throw std::invalid_argument("the function variant requires an operator monotone function");
        lhs = norm(commutator_map(*f, a, b, x), kind);
        rhs = max_fn_norm(*f, 1, eig_a, eig_b) * norm(base_comm, kind);
        w.functions = {f->id};
        id = "comm_function";
        break;
    }
    case CommutatorVariant::Heinz: {
        const double nu = params.nu;
        if (!(nu >= 0.0 && nu <= 1.0))
            throw std::invalid_argument("the Heinz variant needs nu in [0, 1]");
        lhs = norm(heinz_difference(a, b, x, nu), kind);
        rhs = std::abs(2.0 * nu - 1.0) * norm(base_comm, kind);
        w.params["nu"] = nu;
        id = "comm_heinz";
        break;
    }
    case CommutatorVariant::KapilPower: {
        const double r = params.r;
        if (!(r > 0.0 && r <= 1.0))
            throw std::invalid_argument("the power-difference variant needs r in (0, 1]");
        lhs = norm(commutator_map(power_function(r), a, b, x), kind);
        rhs = r *
              std::max(op_norm_fn_deriv(power_function(r - 1.0), 0, eig_a),
                       op_norm_fn_deriv(power_function(r - 1.0), 0, eig_b)) *
              norm(base_comm, kind);
        w.params["r"] = r;
        id = "comm_kapil_power";
        break;
    }
    case CommutatorVariant::KapilWeighted: {
        const double alpha = params.alpha;
        const double nu = params.nu;
        if (!(alpha >= 1.0))
            throw std::invalid_argument("the weighted-power variant needs alpha >= 1");
        if (!(nu >= (1.0 - alpha) / 2.0 && nu <= (1.0 + alpha) / 2.0))
            throw std::invalid_argument("nu outside [(1-alpha)/2, (1+alpha)/2]");
        lhs = alpha * norm(weighted_power_difference(a, b, x, nu), kind);
        const ComplexMatrix power_comm =
            commutator_map(power_function(alpha), a, b, x);
        rhs = std::abs(2.0 * nu - 1.0) *
              std::max(op_norm_fn_deriv(power_function(1.0 - alpha), 0, eig_a),
                       op_norm_fn_deriv(power_function(1.0 - alpha), 0, eig_b)) *
              norm(power_comm, kind);
        w.params["nu"] = nu;
        w.params["alpha"] = alpha;
        id = "comm_kapil_weighted";
        break;
    }
    case CommutatorVariant::PowerLowerBound: {
        const double alpha = params.alpha;
        if (!(alpha >= 1.0))
            throw std::invalid_argument("the inverse-power variant needs alpha >= 1");
        lhs = norm(base_comm, kind);
        const ComplexMatrix power_comm =
            commutator_map(power_function(alpha), a, b, x);
        rhs = (1.0 / alpha) *
              std::max(op_norm_fn_deriv(power_function(1.0 - alpha), 0, eig_a),
                       op_norm_fn_deriv(power_function(1.0 - alpha), 0, eig_b)) *
              norm(power_comm, kind);
        w.params["alpha"] = alpha;
        id = "comm_power_lower";
        break;
    }
    }
    return make_report(id, lhs, rhs, std::move(w));
}

IneqReport check_perturbation(const FunctionSpec &spec, const HermitianMatrix &a,
                              const HermitianMatrix &b, PerturbMode mode, double s,
                              const NormKind &kind) {
    require_same_dim(a.matrix(), b.matrix(), "check_perturbation");
    const auto eig_a = eig_hermitian(a);
    const auto eig_b = eig_hermitian(b);
    if (!(eig_a.eigenvalues.front() > 0.0) || !(eig_b.eigenvalues.front() > 0.0))
        throw DomainError("check_perturbation: arguments must be positive definite");

    const double da = op_norm_fn_deriv(spec, 1, eig_a.eigenvalues);
    const double db = op_norm_fn_deriv(spec, 1, eig_b.eigenvalues);
    Witness w = basic_witness(spec, a.dim(), kind);

    if (mode == PerturbMode::Refinement) {
        if (!spec.operator_monotone)
            throw std::invalid_argument("the refinement comparison requires an operator monotone "
                                        "function");
        const double floor = std::min(eig_a.eigenvalues.front(), eig_b.eigenvalues.front());
        const double lhs = std::max(da, db);
        const double rhs = spec.deriv(1, floor);
        const double lhs31 =
            norm(matrix_function(spec, b).matrix() - matrix_function(spec, a).matrix(), kind);
        const double rhs31 = std::max(da, db) * norm(b - a, kind);
        w.params["a"] = floor;
        w.params["perturb_margin"] = rhs31 - lhs31;
        return make_report("perturb_refinement", lhs, rhs, std::move(w));
    }

    const double lhs =
        norm(matrix_function(spec, b).matrix() - matrix_function(spec, a).matrix(), kind);
    const double diff = norm(b - a, kind);
    double rhs = 0.0;
    std::string id;
    switch (mode) {
    case PerturbMode::Convex:
        if (!spec.norm_deriv_convex)
            throw std::invalid_argument("||f'(.)|| is not declared convex for \"" + spec.id + "\"");
        if (kind.tag != NormTag::Operator)
            throw std::invalid_argument("the convex-mode bound is an operator-norm statement");
        rhs = 0.5 * (da + db) * diff;
        id = "perturb_convex";
        break;
    case PerturbMode::QuasiConvex:
        if (kind.tag == NormTag::Operator) {
            if (!spec.operator_monotone && !spec.norm_deriv_convex)
                throw std::invalid_argument("||f'(.)|| is not declared quasi-convex for \"" +
                                            spec.id + "\"");
        } else if (!spec.operator_monotone) {
            throw std::invalid_argument("the general unitarily invariant bound requires an "
                                        "operator monotone function");
        }
        rhs = std::max(da, db) * diff;
        id = "perturb_quasiconvex";
        break;
    case PerturbMode::SConvex:
        if (!spec.s_convex_order || std::abs(s - *spec.s_convex_order) > 1e-12)
            throw std::invalid_argument("s does not match the declared s-convex order of \"" +
                                        spec.id + "\"");
        if (kind.tag != NormTag::Operator)
            throw std::invalid_argument("the s-convex-mode bound is an operator-norm statement");
        rhs = (da + db) * diff / (s + 1.0);
        id = "perturb_sconvex";
        w.params["s"] = s;
        break;
    case PerturbMode::Refinement:
        break; // handled above
    }
    return make_report(id, lhs, rhs, std::move(w));
}

IneqReport check_simpson(const FunctionSpec &spec, const HermitianMatrix &a,
                         const HermitianMatrix &b, SimpsonRule rule, const NormKind &kind) {
    if (!spec.operator_monotone)
        throw std::invalid_argument("the Simpson bounds require an operator monotone function");
    const SegmentIntegralResult mean = hh_integral(spec, a, b);
    return simpson_core(spec, a, b, mean.value.matrix(), rule, kind);
}

void validate(const SweepConfig &config) {
    if (config.dims.empty())
        throw std::invalid_argument("sweep needs a non-empty dimension list");
    for (int d : config.dims)
        if (d < 1)
            throw std::invalid_argument("sweep dimensions must be positive");
    if (config.samples < 1)
        throw std::invalid_argument("sweep needs samples >= 1");
    if (config.functions.empty())
        throw std::invalid_argument("sweep needs a non-empty function list");
    for (const auto &id : config.functions)
        catalog_get(id); // throws for unknown ids
    if (config.norms.empty())
        throw std::invalid_argument("sweep needs a non-empty norm list");
    if (config.nu_grid.empty())
        throw std::invalid_argument("sweep needs a non-empty nu grid");
    for (double nu : config.nu_grid)
        if (!(nu >= 0.0 && nu <= 1.0))
            throw std::invalid_argument("sweep nu values must lie in [0, 1]");
    if (!(config.spectrum_lo > 0.0) || !(config.spectrum_hi >= config.spectrum_lo))
        throw std::invalid_argument("sweep needs 0 < spectrum_lo <= spectrum_hi");
    if (config.direction_samples < 1)
        throw std::invalid_argument("sweep needs direction_samples >= 1");
}

namespace {

std::string canonical_key(const IneqReport &r) {
    std::ostringstream os;
    os << r.check_id << '|';
    for (const auto &f : r.witness.functions)
        os << f << ',';
    os << '|' << r.witness.norm << '|' << std::setw(6) << std::setfill('0') << r.witness.dim << '|';
    os.precision(17);
    for (const auto &[k, v] : r.witness.params)
        os << k << '=' << v << ';';
    os << '|' << std::setw(20) << std::setfill('0') << r.witness.seed;
    return os.str();
}

class SweepRunner {
  public:
    explicit SweepRunner(const SweepConfig &config) : cfg_(config) {}

    std::vector<IneqReport> run() {
        std::set<std::string> seen;
        for (const auto &id : cfg_.functions)
            if (seen.insert(id).second)
                specs_.push_back(catalog_get(id));

        counterexample_pass();
        for (const auto &spec : specs_)
            if (spec.id != "square_minus_one")
                single_function_pass(spec);
        pair_pass();
        function_free_pass();

        std::stable_sort(reports_.begin(), reports_.end(),
                         [](const IneqReport &x, const IneqReport &y) {
                             return canonical_key(x) < canonical_key(y);
                         });
        return std::move(reports_);
    }

  private:
    template <typename Fn> void guard(const std::string &check_id, const Witness &w, Fn &&fn) {
        try {
            reports_.push_back(fn());
        } catch (const std::exception &e) {
            IneqReport r;
            r.check_id = check_id;
            r.witness = w;
            r.pass = false;
            r.error = e.what();
            reports_.push_back(std::move(r));
        }
    }

    uint64_t stream_seed(const std::string &label, int sample) const {
        return derive_seed(cfg_.seed, fnv1a(label), static_cast<uint64_t>(sample));
    }

    // Example-style counterexample: the norm map of t^2 - 1 is not
    // quasi-convex; the check is asserted to fail.
    void counterexample_pass() {
        const auto it = std::find(cfg_.functions.begin(), cfg_.functions.end(), "square_minus_one");
        if (it == cfg_.functions.end())
            return;
        const FunctionSpec spec = catalog_get("square_minus_one");
        const int dim = cfg_.dims.front();
        const HermitianMatrix minus_one(Complex(-1.0, 0.0) * ComplexMatrix::identity(dim));
        const HermitianMatrix plus_one(ComplexMatrix::identity(dim));
        Witness w = basic_witness(spec, dim, NormKind::operator_norm());
        w.params["nu"] = 0.5;
        w.params["n"] = 0.0;
        guard("quasiconvex_fn_norm", w, [&] {
            return check_quasiconvex_fn_norm(spec, minus_one, plus_one, 0.5, 0, true);
        });
        // t^2 - 1 still participates in the convex-mode bounds below.
        single_function_pass(spec);
    }

    void single_function_pass(const FunctionSpec &spec) {
        const bool om = spec.operator_monotone;
        const bool hh_ok = om || spec.norm_deriv_convex || spec.s_convex_order.has_value();
        for (int dim : cfg_.dims)
            for (int sample = 0; sample < cfg_.samples; ++sample) {
                const uint64_t base = stream_seed("fn:" + spec.id + ":dim" + std::to_string(dim),
                                                  sample);
                const HermitianMatrix a =
                    random_pd(dim, cfg_.spectrum_lo, cfg_.spectrum_hi, derive_seed(base, 1));
                const HermitianMatrix b =
                    random_pd(dim, cfg_.spectrum_lo, cfg_.spectrum_hi, derive_seed(base, 2));
                const ComplexMatrix x = random_complex(dim, derive_seed(base, 3));
                Witness w0 = basic_witness(spec, dim, NormKind::operator_norm());
                w0.seed = base;

                if (om)
                    for (int n = 1; n <= 3; ++n)
                        for (double nu : cfg_.nu_grid)
                            guard("quasiconvex_fn_norm", w0, [&] {
                                IneqReport r = check_quasiconvex_fn_norm(spec, a, b, nu, n);
                                r.witness.seed = base;
                                return r;
                            });
                if (spec.norm_fn_quasiconvex)
                    for (double nu : cfg_.nu_grid)
                        guard("quasiconvex_fn_norm", w0, [&] {
                            IneqReport r = check_quasiconvex_fn_norm(spec, a, b, nu, 0);
                            r.witness.seed = base;
                            return r;
                        });

                if (om)
                    for (int n = 1; n <= 2; ++n)
                        for (const NormKind &kind : cfg_.norms)
                            guard("frechet_norm_bound", w0, [&] {
                                IneqReport r = check_frechet_norm_bound(
                                    spec, a, n, kind, cfg_.direction_samples,
                                    derive_seed(base, 10 + n));
                                return r;
                            });

                if (hh_ok) {
                    bool have_mean = false;
                    ComplexMatrix mean;
                    try {
                        mean = hh_integral(spec, a, b).value.matrix();
                        have_mean = true;
                    } catch (const std::exception &e) {
                        IneqReport r;
                        r.check_id = "hh_integral";
                        r.witness = w0;
                        r.error = e.what();
                        reports_.push_back(std::move(r));
                    }
                    if (have_mean) {
                        for (double nu : cfg_.nu_grid) {
                            if (spec.norm_deriv_convex)
                                guard("hh_convex", w0, [&] {
                                    IneqReport r = hh_weighted_core(spec, a, b, mean, nu,
                                                                    HHMode::Convex, 1.0,
                                                                    NormKind::operator_norm());
                                    r.witness.seed = base;
                                    return r;
                                });
                            if (spec.s_convex_order)
                                guard("hh_sconvex", w0, [&] {
                                    IneqReport r = hh_weighted_core(
                                        spec, a, b, mean, nu, HHMode::SConvex,
                                        *spec.s_convex_order, NormKind::operator_norm());
                                    r.witness.seed = base;
                                    return r;
                                });
                            for (const NormKind &kind : cfg_.norms) {
                                const bool applicable =
                                    om || (kind.tag == NormTag::Operator && spec.norm_deriv_convex);
                                if (!applicable)
                                    continue;
                                guard("hh_quasiconvex", w0, [&] {
                                    IneqReport r = hh_weighted_core(spec, a, b, mean, nu,
                                                                    HHMode::QuasiConvex, 1.0, kind);
                                    r.witness.seed = base;
                                    return r;
                                });
                            }
                        }
                        if (om)
                            for (SimpsonRule rule : {SimpsonRule::OneThird, SimpsonRule::ThreeEighth})
                                for (const NormKind &kind : cfg_.norms)
                                    guard("simpson", w0, [&] {
                                        IneqReport r = simpson_core(spec, a, b, mean, rule, kind);
                                        r.witness.seed = base;
                                        return r;
                                    });
                    }
                }

                if (spec.norm_deriv_convex)
                    guard("perturb_convex", w0, [&] {
                        IneqReport r = check_perturbation(spec, a, b, PerturbMode::Convex, 1.0,
                                                          NormKind::operator_norm());
                        r.witness.seed = base;
                        return r;
                    });
                if (spec.s_convex_order)
                    guard("perturb_sconvex", w0, [&] {
                        IneqReport r = check_perturbation(spec, a, b, PerturbMode::SConvex,
                                                          *spec.s_convex_order,
                                                          NormKind::operator_norm());
                        r.witness.seed = base;
                        return r;
                    });
                for (const NormKind &kind : cfg_.norms) {
                    const bool applicable =
                        om || (kind.tag == NormTag::Operator && spec.norm_deriv_convex);
                    if (applicable)
                        guard("perturb_quasiconvex", w0, [&] {
                            IneqReport r =
                                check_perturbation(spec, a, b, PerturbMode::QuasiConvex, 1.0, kind);
                            r.witness.seed = base;
                            return r;
                        });
                    if (om) {
                        guard("perturb_refinement", w0, [&] {
                            IneqReport r =
                                check_perturbation(spec, a, b, PerturbMode::Refinement, 1.0, kind);
                            r.witness.seed = base;
                            return r;
                        });
                        guard("comm_function", w0, [&] {
                            IneqReport r = check_commutator_bounds(spec, std::nullopt, a, b, x,
                                                                   kind, CommutatorVariant::Function, {});
                            r.witness.seed = base;
                            return r;
                        });
                    }
                    if (spec.power_exponent && *spec.power_exponent > 0.0 &&
                        *spec.power_exponent <= 1.0)
                        guard("comm_kapil_power", w0, [&] {
                            CommutatorParams p;
                            p.r = *spec.power_exponent;
                            IneqReport r = check_commutator_bounds(
                                std::nullopt, std::nullopt, a, b, x, kind,
                                CommutatorVariant::KapilPower, p);
                            r.witness.seed = base;
                            r.witness.functions = {spec.id};
                            return r;
                        });
                }
            }
    }

    void pair_pass() {
        std::vector<const FunctionSpec *> monotone;
        for (const auto &spec : specs_)
            if (spec.operator_monotone)
                monotone.push_back(&spec);
        for (size_t i = 0; i < monotone.size(); ++i)
            for (size_t j = i + 1; j < monotone.size(); ++j) {
                const FunctionSpec &f = *monotone[i];
                const FunctionSpec &g = *monotone[j];
                const FunctionSpec fg = product_function(f, g);
                for (int dim : cfg_.dims)
                    for (int sample = 0; sample < cfg_.samples; ++sample) {
                        const uint64_t base = stream_seed(
                            "pair:" + f.id + ":" + g.id + ":dim" + std::to_string(dim), sample);
                        const HermitianMatrix a = random_pd(dim, cfg_.spectrum_lo, cfg_.spectrum_hi,
                                                            derive_seed(base, 1));
                        const HermitianMatrix b = random_pd(dim, cfg_.spectrum_lo, cfg_.spectrum_hi,
                                                            derive_seed(base, 2));
                        const ComplexMatrix x = random_complex(dim, derive_seed(base, 3));
                        Witness w0;
                        w0.seed = base;
                        w0.dim = dim;
                        w0.functions = {f.id, g.id};

                        bool have_mean = false;
                        ComplexMatrix mean;
                        try {
                            mean = hh_integral(fg, a, b).value.matrix();
                            have_mean = true;
                        } catch (const std::exception &e) {
                            IneqReport r;
                            r.check_id = "hh_integral";
                            r.witness = w0;
                            r.error = e.what();
                            reports_.push_back(std::move(r));
                        }
                        if (have_mean)
                            for (double nu : cfg_.nu_grid)
                                for (const NormKind &kind : cfg_.norms)
                                    guard("hh_product", w0, [&] {
                                        IneqReport r =
                                            product_hh_core(f, g, fg, a, b, mean, nu, kind);
                                        r.witness.seed = base;
                                        return r;
                                    });
                        for (const NormKind &kind : cfg_.norms) {
                            guard("comm_product", w0, [&] {
                                IneqReport r = check_commutator_bounds(
                                    f, g, a, b, x, kind, CommutatorVariant::Product, {});
                                r.witness.seed = base;
                                return r;
                            });
                            guard("perturb_product", w0, [&] {
                                IneqReport r = check_product_perturbation(f, g, a, b, kind);
                                r.witness.seed = base;
                                return r;
                            });
                        }
                    }
            }
    }

    void function_free_pass() {
        for (int dim : cfg_.dims)
            for (int sample = 0; sample < cfg_.samples; ++sample) {
                const uint64_t base = stream_seed("comm:dim" + std::to_string(dim), sample);
                const HermitianMatrix a =
                    random_pd(dim, cfg_.spectrum_lo, cfg_.spectrum_hi, derive_seed(base, 1));
                const HermitianMatrix b =
                    random_pd(dim, cfg_.spectrum_lo, cfg_.spectrum_hi, derive_seed(base, 2));
                const ComplexMatrix x = random_complex(dim, derive_seed(base, 3));
                Witness w0;
                w0.seed = base;
                w0.dim = dim;

                for (const NormKind &kind : cfg_.norms) {
                    for (double nu : cfg_.nu_grid) {
                        guard("comm_heinz", w0, [&] {
                            CommutatorParams p;
                            p.nu = nu;
                            IneqReport r =
                                check_commutator_bounds(std::nullopt, std::nullopt, a, b, x, kind,
                                                        CommutatorVariant::Heinz, p);
                            r.witness.seed = base;
                            return r;
                        });
                        for (double alpha : kAlphaGrid)
                            guard("comm_kapil_weighted", w0, [&] {
                                CommutatorParams p;
                                p.nu = nu;
                                p.alpha = alpha;
                                IneqReport r = check_commutator_bounds(
                                    std::nullopt, std::nullopt, a, b, x, kind,
                                    CommutatorVariant::KapilWeighted, p);
                                r.witness.seed = base;
                                return r;
                            });
                    }
                    for (double alpha : kAlphaGrid)
                        guard("comm_power_lower", w0, [&] {
                            CommutatorParams p;
                            p.alpha = alpha;
                            IneqReport r = check_commutator_bounds(std::nullopt, std::nullopt, a, b,
                                                                   x, kind,
                                                                   CommutatorVariant::PowerLowerBound, p);
                            r.witness.seed = base;
                            return r;
                        });
                }
            }
    }

    const SweepConfig &cfg_;
    std::vector<FunctionSpec> specs_;
    std::vector<IneqReport> reports_;
};

} // namespace

std::vector<IneqReport> run_sweep(const SweepConfig &config) {
    validate(config);
    return SweepRunner(config).run();
}

SweepSummary summarize(const std::vector<IneqReport> &reports) {
    SweepSummary s;
    for (const auto &r : reports) {
        if (r.expected_fail)
            r.pass ? ++s.unexpected : ++s.expected_failed;
        else
            r.pass ? ++s.passed : ++s.unexpected;
    }
    return s;
}

} // namespace loewner
