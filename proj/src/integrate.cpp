#include "loewner/integrate.hpp"

#include "loewner/matrix.hpp" // ConvergenceError

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace loewner {

namespace {

GaussRule make_rule(int n) {
    // Roots of P_n by Newton from the Chebyshev-like initial guess; the
    // symmetric counterpart is filled in directly.
    GaussRule rule;
    rule.nodes.assign(n, 0.0);
    rule.weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15)
                break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

double panel_value(const std::function<double(double)> &f, double a, double b,
                   const GaussRule &rule) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

struct Panel {
    double a, b;
    double value; // two-half estimate
    double err;   // |two-half - single-panel|
};

Panel make_panel(const std::function<double(double)> &f, double a, double b,
                 const GaussRule &rule) {
    const double whole = panel_value(f, a, b, rule);
    const double mid = 0.5 * (a + b);
    const double split = panel_value(f, a, mid, rule) + panel_value(f, mid, b, rule);
    return {a, b, split, std::abs(split - whole)};
}

} // namespace

const GaussRule &gauss_legendre(int n) {
    if (n < 1)
        throw std::invalid_argument("Gauss-Legendre order must be >= 1");
    static std::mutex mutex;
    static std::map<int, GaussRule> cache;
    const std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                          double rel_tol, double abs_tol) {
    // Global error budget: repeatedly bisect the panel with the largest
    // error estimate.  Integrable endpoint singularities converge because
    // each bisection shrinks the offending corner's contribution by a
    // constant factor; panels stay sorted by interval so the final sum is
    // order-deterministic.
    const GaussRule &rule = gauss_legendre(16);
    std::vector<Panel> panels{make_panel(f, a, b, rule)};
    constexpr int kMaxSplits = 4000;
    for (int split = 0;; ++split) {
        double total = 0.0, err = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total += panels[i].value;
            err += panels[i].err;
            if (panels[i].err > panels[worst].err)
                worst = i;
        }
        const double tol = std::max(abs_tol, rel_tol * std::max(std::abs(total), 1e-30));
        if (err <= tol) {
            double sum = 0.0;
            for (const Panel &p : panels)
                sum += p.value;
            return sum;
        }
        if (split >= kMaxSplits)
            throw ConvergenceError("adaptive quadrature exhausted its panel budget");
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        panels[worst] = make_panel(f, p.a, mid, rule);
        panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1,
                      make_panel(f, mid, p.b, rule));
    }
}

} // namespace loewner
