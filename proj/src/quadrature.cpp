#include "loewner/quadrature.hpp"

#include "loewner/integrate.hpp"

#include <cmath>
#include <functional>

namespace loewner {

namespace {

constexpr int kPanelCap = 1 << 10;

// Composite 16-point Gauss-Legendre of a matrix-valued integrand on [0, 1],
// panels and nodes accumulated in fixed index order for determinism.
ComplexMatrix composite_gl16(const std::function<ComplexMatrix(double)> &integrand, int dim,
                             int panels) {
    const GaussRule &rule = gauss_legendre(16);
    ComplexMatrix sum(dim);
    const double width = 1.0 / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * width;
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = mid + 0.5 * width * rule.nodes[i];
            sum += (0.5 * width * rule.weights[i]) * integrand(t);
        }
    }
    return sum;
}

struct RefinedIntegral {
    ComplexMatrix value;
    int levels;
    double est_error;
};

RefinedIntegral refine_until(const std::function<ComplexMatrix(double)> &integrand, int dim,
                             double tol) {
    ComplexMatrix prev = composite_gl16(integrand, dim, 1);
    int levels = 0;
    for (int panels = 2; panels <= kPanelCap; panels *= 2) {
        ComplexMatrix next = composite_gl16(integrand, dim, panels);
        const double diff = (next - prev).frobenius_norm();
        ++levels;
        if (diff < tol)
            return {std::move(next), levels, diff};
        prev = std::move(next);
    }
    throw ConvergenceError("segment integral did not converge within the panel cap");
}

} // namespace

HermitianMatrix segment_point(const HermitianMatrix &a, const HermitianMatrix &b, double t) {
    return HermitianMatrix((Complex(1.0 - t, 0.0) * a.matrix()) + (Complex(t, 0.0) * b.matrix()));
}

SegmentIntegralResult hh_integral(const FunctionSpec &spec, const HermitianMatrix &a,
                                  const HermitianMatrix &b, double tol) {
    require_same_dim(a.matrix(), b.matrix(), "hh_integral");
    if (!(tol > 0.0))
        throw std::invalid_argument("hh_integral tolerance must be positive");
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0})
        matrix_function(spec, segment_point(a, b, t)); // domain pre-check
    const auto integrand = [&](double t) {
        return matrix_function(spec, segment_point(a, b, t)).matrix();
    };
    RefinedIntegral r = refine_until(integrand, a.dim(), tol);
    return {HermitianMatrix(std::move(r.value)), r.levels, r.est_error};
}

WeightMoments weight_moments(double nu, double s) {
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("weight_moments needs nu in [0, 1]");
    if (!(s > 0.0 && s <= 1.0))
        throw std::invalid_argument("weight_moments needs s in (0, 1]");
    const auto ms_at = [s](double v) {
        return 1.0 / (s + 2.0) - v / (s + 1.0) +
               2.0 * std::pow(v, s + 2.0) / ((s + 1.0) * (s + 2.0));
    };
    const auto m1_at = [](double v) { return (2.0 * v * v * v - 3.0 * v + 2.0) / 6.0; };
    WeightMoments m;
    m.m0 = nu * nu - nu + 0.5;
    m.m1 = m1_at(nu);
    m.m1c = m1_at(1.0 - nu);
    m.ms = ms_at(nu);
    m.msc = ms_at(1.0 - nu);
    return m;
}

HermitianMatrix simpson_13(const FunctionSpec &spec, const HermitianMatrix &a,
                           const HermitianMatrix &b) {
    require_same_dim(a.matrix(), b.matrix(), "simpson_13");
    const ComplexMatrix fa = matrix_function(spec, a).matrix();
    const ComplexMatrix fm = matrix_function(spec, segment_point(a, b, 0.5)).matrix();
    const ComplexMatrix fb = matrix_function(spec, b).matrix();
    return HermitianMatrix(Complex(1.0 / 6.0, 0.0) * (fa + Complex(4.0, 0.0) * fm + fb));
}

HermitianMatrix simpson_38(const FunctionSpec &spec, const HermitianMatrix &a,
                           const HermitianMatrix &b) {
    require_same_dim(a.matrix(), b.matrix(), "simpson_38");
    const ComplexMatrix fa = matrix_function(spec, a).matrix();
    const ComplexMatrix f13 = matrix_function(spec, segment_point(a, b, 1.0 / 3.0)).matrix();
    const ComplexMatrix f23 = matrix_function(spec, segment_point(a, b, 2.0 / 3.0)).matrix();
    const ComplexMatrix fb = matrix_function(spec, b).matrix();
    return HermitianMatrix(Complex(1.0 / 8.0, 0.0) *
                           (fa + Complex(3.0, 0.0) * f13 + Complex(3.0, 0.0) * f23 + fb));
}

double mean_defect_residual(const FunctionSpec &spec, const HermitianMatrix &a, const HermitianMatrix &b,
                       double nu, double tol) {
    require_same_dim(a.matrix(), b.matrix(), "mean_defect_residual");
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("mean_defect_residual needs nu in [0, 1]");

    const SegmentIntegralResult mean = hh_integral(spec, a, b, tol);
    const ComplexMatrix lhs = Complex(nu, 0.0) * matrix_function(spec, a).matrix() +
                              Complex(1.0 - nu, 0.0) * matrix_function(spec, b).matrix() -
                              mean.value.matrix();

    const HermitianMatrix diff = b - a;
    const auto integrand = [&](double t) {
        const HermitianMatrix point = segment_point(a, b, t);
        return Complex(t - nu, 0.0) * frechet_derivative(spec, point, diff).matrix();
    };
    const RefinedIntegral rhs = refine_until(integrand, a.dim(), tol);

    return (lhs - rhs.value).frobenius_norm();
}

} // namespace loewner
