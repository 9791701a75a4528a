#pragma once

#include "loewner/matrix.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace loewner {

/// Representation-measure data for an operator monotone function:
/// f'(t) = beta + \int_0^inf density(lambda) (lambda + t)^{-2} dlambda.
struct RepresentationMeasure {
    double beta = 0.0;
    std::function<double(double)> density;
};

/// Scalar catalog entry: value and derivatives up to order 4, domain, and
/// the convexity/monotonicity facts the inequality checkers key on.
struct FunctionSpec {
    std::string id;
    double domain_lo = 0.0; // open lower endpoint; -inf means the whole line
    bool operator_monotone = false;
    /// ||f(.)|| on positive definite arguments is known quasi-convex
    /// (order-0 checks; true for every real power).
    bool norm_fn_quasiconvex = false;
    /// ||f'(.)|| is convex and f belongs to the class where the Frechet
    /// derivative norm equals ||f'(A)||.
    bool norm_deriv_convex = false;
    /// Declared exponent for which ||f'(.)|| is s-convex (powers t^r with
    /// 1 < r < 2 carry s = r - 1).
    std::optional<double> s_convex_order;
    std::optional<double> power_exponent; // set for "pow:<r>"
    std::optional<RepresentationMeasure> measure;
    std::function<double(int, double)> derivs;

    double eval(double t) const { return deriv(0, t); }
    double deriv(int n, double t) const;
    bool in_domain(double t) const { return t > domain_lo; }
    void require_in_domain(double t) const;
};

/// Catalog ids: "pow:<r>", "log", "exp", "square", "square_minus_one",
/// "product:<id1>:<id2>".  Throws std::invalid_argument for unknown or
/// malformed ids.
FunctionSpec catalog_get(const std::string &id);

/// t^r without the string round-trip; the id is formatted losslessly.
FunctionSpec power_function(double r);

/// Pointwise product f*g with derivatives by the Leibniz rule.
FunctionSpec product_function(const FunctionSpec &f, const FunctionSpec &g);

/// f[x_0, ..., x_n] for n <= 3.  Clusters whose spread falls below
/// 1e-7 * (1 + max|x_i|) collapse to f^(k)(midpoint) / k!.
double divided_difference(const FunctionSpec &spec, std::vector<double> points);

/// Right-hand side of the integral formula for f': beta plus the measure
/// integral, evaluated by adaptive quadrature after mapping (0, inf) to
/// (0, 1) via lambda = u / (1 - u).  Throws if the spec has no measure.
double measure_derivative(const FunctionSpec &spec, double t);

std::vector<std::string> parse_function_list(const std::string &csv);

} // namespace loewner
