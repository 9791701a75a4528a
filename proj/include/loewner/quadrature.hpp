#pragma once

#include "loewner/calculus.hpp"

namespace loewner {

/// Converged segment integral plus how hard the refinement had to work.
struct SegmentIntegralResult {
    HermitianMatrix value;
    int refinement_levels;
    double est_error; // Frobenius difference of the last two refinements
};

/// (1 - t) A + t B.
HermitianMatrix segment_point(const HermitianMatrix &a, const HermitianMatrix &b, double t);

/// \int_0^1 f((1-t)A + tB) dt by composite 16-point Gauss-Legendre panels,
/// doubling the panel count until consecutive refinements agree to tol in
/// Frobenius norm (panel cap 2^10).  The segment's spectrum is pre-checked
/// at t in {0, 1/4, 1/2, 3/4, 1}; every node evaluation re-checks.
SegmentIntegralResult hh_integral(const FunctionSpec &spec, const HermitianMatrix &a,
                                  const HermitianMatrix &b, double tol = 1e-9);

/// Closed forms of the weight integrals over [0, 1]:
///   m0  = int |t - nu| dt            = nu^2 - nu + 1/2
///   m1  = int |t - nu| t dt          = (2 nu^3 - 3 nu + 2) / 6
///   m1c = int |t - nu| (1 - t) dt    = m1 with nu -> 1 - nu
///   ms  = int |t - nu| t^s dt        = 1/(s+2) - nu/(s+1) + 2 nu^(s+2)/((s+1)(s+2))
///   msc = int |t - nu| (1 - t)^s dt  = ms with nu -> 1 - nu
struct WeightMoments {
    double m0, m1, m1c, ms, msc;
};

WeightMoments weight_moments(double nu, double s);

/// (f(A) + 4 f((A+B)/2) + f(B)) / 6.
HermitianMatrix simpson_13(const FunctionSpec &spec, const HermitianMatrix &a,
                           const HermitianMatrix &b);

/// (f(A) + 3 f((2A+B)/3) + 3 f((A+2B)/3) + f(B)) / 8.
HermitianMatrix simpson_38(const FunctionSpec &spec, const HermitianMatrix &a,
                           const HermitianMatrix &b);

/// Frobenius norm of the defect between the two sides of the identity
///   nu f(A) + (1-nu) f(B) - int_0^1 f((1-t)A+tB) dt
///     = int_0^1 (t - nu) Df((1-t)A+tB)(B-A) dt,
/// both sides integrated independently to tolerance tol.
double mean_defect_residual(const FunctionSpec &spec, const HermitianMatrix &a, const HermitianMatrix &b,
                       double nu, double tol = 1e-9);

} // namespace loewner
