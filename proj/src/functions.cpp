#include "loewner/functions.hpp"

#include "loewner/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace loewner {

namespace {

constexpr int kMaxOrder = 4;
constexpr double kFactorial[] = {1.0, 1.0, 2.0, 6.0, 24.0};

double parse_real(const std::string &text, const std::string &id) {
    try {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception &) {
        throw std::invalid_argument("malformed parameter in function id \"" + id + "\"");
    }
}

FunctionSpec make_pow(double r, const std::string &id) {
    FunctionSpec f;
    f.id = id;
    f.domain_lo = 0.0;
    f.power_exponent = r;
    f.operator_monotone = (r >= 0.0 && r <= 1.0);
    f.norm_fn_quasiconvex = true;
    f.norm_deriv_convex = !(r > 1.0 && r < 2.0);
    if (r > 1.0 && r < 2.0)
        f.s_convex_order = r - 1.0;
    if (r > 0.0 && r < 1.0) {
        const double coeff = std::sin(r * std::numbers::pi) / std::numbers::pi;
        f.measure = RepresentationMeasure{0.0, [coeff, r](double lambda) {
                                              return coeff * std::pow(lambda, r);
                                          }};
    }
    f.derivs = [r](int n, double t) {
        double coeff = 1.0;
        for (int k = 0; k < n; ++k)
            coeff *= r - k;
        if (coeff == 0.0)
            return 0.0;
        return coeff * std::pow(t, r - n);
    };
    return f;
}

FunctionSpec make_log() {
    FunctionSpec f;
    f.id = "log";
    f.domain_lo = 0.0;
    f.operator_monotone = true;
    f.measure = RepresentationMeasure{0.0, [](double) { return 1.0; }};
    f.derivs = [](int n, double t) {
        if (n == 0)
            return std::log(t);
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        return sign * kFactorial[n - 1] * std::pow(t, -static_cast<double>(n));
    };
    return f;
}

FunctionSpec make_exp() {
    FunctionSpec f;
    f.id = "exp";
    f.domain_lo = -std::numeric_limits<double>::infinity();
    f.norm_deriv_convex = true;
    f.derivs = [](int, double t) { return std::exp(t); };
    return f;
}

FunctionSpec make_quadratic(double shift, const std::string &id) {
    FunctionSpec f;
    f.id = id;
    f.domain_lo = -std::numeric_limits<double>::infinity();
    f.norm_deriv_convex = true;
    f.derivs = [shift](int n, double t) {
        switch (n) {
        case 0:
            return t * t + shift;
        case 1:
            return 2.0 * t;
        case 2:
            return 2.0;
        default:
            return 0.0;
        }
    };
    return f;
}

FunctionSpec make_product(const FunctionSpec &a, const FunctionSpec &b) {
    FunctionSpec f;
    f.id = "product:" + a.id + ":" + b.id;
    f.domain_lo = std::max(a.domain_lo, b.domain_lo);
    f.derivs = [da = a.derivs, db = b.derivs](int n, double t) {
        // Leibniz rule
        static constexpr double kBinom[5][5] = {{1},
                                                {1, 1},
                                                {1, 2, 1},
                                                {1, 3, 3, 1},
                                                {1, 4, 6, 4, 1}};
        double sum = 0.0;
        for (int k = 0; k <= n; ++k)
            sum += kBinom[n][k] * da(k, t) * db(n - k, t);
        return sum;
    };
    return f;
}

// "product:<a>:<b>" where <a> and <b> may themselves contain ':'.  Try every
// split point and accept the first one where both halves resolve.
FunctionSpec parse_product(const std::string &rest, const std::string &id) {
    for (size_t pos = rest.find(':'); pos != std::string::npos; pos = rest.find(':', pos + 1)) {
        const std::string left = rest.substr(0, pos);
        const std::string right = rest.substr(pos + 1);
        try {
            const FunctionSpec a = catalog_get(left);
            const FunctionSpec b = catalog_get(right);
            return make_product(a, b);
        } catch (const std::invalid_argument &) {
            continue;
        }
    }
    throw std::invalid_argument("cannot split product id \"" + id + "\" into two catalog functions");
}

} // namespace

double FunctionSpec::deriv(int n, double t) const {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("derivative order must be in 0..4, got " + std::to_string(n));
    require_in_domain(t);
    return derivs(n, t);
}

void FunctionSpec::require_in_domain(double t) const {
    if (!(t > domain_lo)) {
        std::ostringstream os;
        os << "argument " << t << " outside the domain of \"" << id << "\" (requires t > " << domain_lo
           << ")";
        throw DomainError(os.str());
    }
}

FunctionSpec catalog_get(const std::string &id) {
    if (id == "log")
        return make_log();
    if (id == "exp")
        return make_exp();
    if (id == "square")
        return make_quadratic(0.0, id);
    if (id == "square_minus_one")
        return make_quadratic(-1.0, id);
    if (id.rfind("pow:", 0) == 0)
        return make_pow(parse_real(id.substr(4), id), id);
    if (id.rfind("product:", 0) == 0)
        return parse_product(id.substr(8), id);
    throw std::invalid_argument("unknown function id \"" + id + "\"");
}

FunctionSpec power_function(double r) {
    std::ostringstream id;
    id.precision(17);
    id << "pow:" << r;
    return make_pow(r, id.str());
}

FunctionSpec product_function(const FunctionSpec &f, const FunctionSpec &g) {
    return make_product(f, g);
}

namespace {

double dd_recurse(const FunctionSpec &f, const std::vector<double> &x, int i, int j) {
    if (i == j)
        return f.eval(x[i]);
    const double spread = x[j] - x[i]; // points are sorted ascending
    const double scale = 1.0 + std::max(std::abs(x[i]), std::abs(x[j]));
    if (spread <= 1e-7 * scale) {
        const int k = j - i;
        return f.deriv(k, 0.5 * (x[i] + x[j])) / kFactorial[k];
    }
    return (dd_recurse(f, x, i + 1, j) - dd_recurse(f, x, i, j - 1)) / spread;
}

} // namespace

double divided_difference(const FunctionSpec &spec, std::vector<double> points) {
    if (points.empty() || points.size() > 4)
        throw std::invalid_argument("divided_difference takes 1..4 points (order <= 3)");
    for (double t : points)
        spec.require_in_domain(t);
    std::sort(points.begin(), points.end());
    return dd_recurse(spec, points, 0, static_cast<int>(points.size()) - 1);
}

double measure_derivative(const FunctionSpec &spec, double t) {
    if (!spec.measure)
        throw std::invalid_argument("function \"" + spec.id + "\" carries no representation measure");
    spec.require_in_domain(t);
    const auto &m = *spec.measure;
    // lambda = u / (1 - u) maps the half-line to (0, 1); integrating in
    // v = 1 - u puts the heavy tail at v -> 0 where doubles still resolve,
    // and (lambda + t) * v = (1 - v) + t v sidesteps the overflow in
    // (lambda + t)^2 for tiny v.
    const auto integrand = [&m, t](double v) {
        const double lambda = (1.0 - v) / v;
        const double scaled = (1.0 - v) + t * v;
        return m.density(lambda) / (scaled * scaled);
    };
    return m.beta + integrate_adaptive(integrand, 0.0, 1.0, 1e-8);
}

std::vector<std::string> parse_function_list(const std::string &csv) {
    std::vector<std::string> ids;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        if (!token.empty())
            ids.push_back(token);
    if (ids.empty())
        throw std::invalid_argument("empty function list");
    return ids;
}

} // namespace loewner
