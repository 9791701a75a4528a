#pragma once

#include "loewner/calculus.hpp"
#include "loewner/random.hpp"

#include <cmath>

namespace loewner::testing {

inline ComplexMatrix diag(std::vector<double> values) {
    const int n = static_cast<int>(values.size());
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        m(i, i) = values[i];
    return m;
}

inline HermitianMatrix hdiag(std::vector<double> values) {
    return HermitianMatrix(diag(std::move(values)));
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

/// Central finite-difference oracle for Df(A)(B).
inline ComplexMatrix frechet_fd(const FunctionSpec &spec, const HermitianMatrix &a,
                                const HermitianMatrix &b, double h) {
    const HermitianMatrix plus(a.matrix() + Complex(h, 0.0) * b.matrix());
    const HermitianMatrix minus(a.matrix() - Complex(h, 0.0) * b.matrix());
    return Complex(1.0 / (2.0 * h), 0.0) *
           (matrix_function(spec, plus).matrix() - matrix_function(spec, minus).matrix());
}

/// Central finite-difference oracle for D^2 f(A)(B, B).
inline ComplexMatrix frechet2_fd(const FunctionSpec &spec, const HermitianMatrix &a,
                                 const HermitianMatrix &b, double h) {
    const HermitianMatrix plus(a.matrix() + Complex(h, 0.0) * b.matrix());
    const HermitianMatrix minus(a.matrix() - Complex(h, 0.0) * b.matrix());
    return Complex(1.0 / (h * h), 0.0) *
           (matrix_function(spec, plus).matrix() - 2.0 * matrix_function(spec, a).matrix() +
            matrix_function(spec, minus).matrix());
}

/// f(A)X - Xf(B) recovered from the doubled system diag(A, B) with X placed
/// in the upper off-diagonal block.
inline ComplexMatrix commutator_via_embedding(const FunctionSpec &spec, const HermitianMatrix &a,
                                              const HermitianMatrix &b, const ComplexMatrix &x) {
    const int n = a.dim();
    ComplexMatrix big(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            big(i, j) = a(i, j);
            big(n + i, n + j) = b(i, j);
        }
    const ComplexMatrix f_big = matrix_function(spec, HermitianMatrix(big)).matrix();
    ComplexMatrix x_big(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            x_big(i, n + j) = x(i, j);
    const ComplexMatrix g = f_big * x_big - x_big * f_big;
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = g(i, n + j);
    return out;
}

} // namespace loewner::testing
