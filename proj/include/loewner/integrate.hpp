#pragma once

#include <functional>
#include <vector>

namespace loewner {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
/// computed once by Newton iteration on the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule &gauss_legendre(int n);

/// Adaptive Gauss-Legendre on [a, b]: a panel is accepted when the 16-point
/// estimate and the sum of its two half-panel estimates agree to the local
/// share of the tolerance.  Endpoint singularities integrable in the usual
/// sense are handled by the bisection (nodes never touch the endpoints).
double integrate_adaptive(const std::function<double(double)> &f, double a, double b,
                          double rel_tol, double abs_tol = 0.0);

} // namespace loewner
