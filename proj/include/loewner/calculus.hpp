#pragma once

#include "loewner/eig.hpp"
#include "loewner/functions.hpp"
#include "loewner/norms.hpp"

#include <cstdint>

namespace loewner {

/// First-divided-difference matrix of f over a fixed eigenvalue vector:
/// entries f[lambda_i, lambda_j], diagonal f'(lambda_i).
struct LoewnerMatrix {
    std::vector<double> base_eigenvalues;
    std::vector<double> entries; // row-major, dim x dim, real symmetric

    int dim() const { return static_cast<int>(base_eigenvalues.size()); }
    double at(int i, int j) const { return entries[static_cast<size_t>(i) * dim() + j]; }
};

LoewnerMatrix loewner_matrix(const FunctionSpec &spec, const std::vector<double> &eigenvalues);

/// f(A) = U f(Lambda) U*.  Throws DomainError when the spectrum leaves the
/// domain of f.
HermitianMatrix matrix_function(const FunctionSpec &spec, const HermitianMatrix &a);

/// f^(n)(A), the scalar n-th derivative applied spectrally.
HermitianMatrix matrix_function_deriv(const FunctionSpec &spec, int n, const HermitianMatrix &a);

/// Operator norm of f^(n)(A) straight from the spectrum: max_i |f^(n)(lambda_i)|.
double op_norm_fn_deriv(const FunctionSpec &spec, int n, const std::vector<double> &eigenvalues);
double op_norm_fn_deriv(const FunctionSpec &spec, int n, const HermitianMatrix &a);

/// Df(A)(B) via the Loewner Schur product in the eigenbasis of A.
HermitianMatrix frechet_derivative(const FunctionSpec &spec, const HermitianMatrix &a,
                                   const HermitianMatrix &b);

/// n-th order Frechet derivative (n <= 3): in the eigenbasis of A the
/// (i0, in) entry sums divided differences f[lambda_i0, ..., lambda_in]
/// against products of the rotated directions over all orderings.
HermitianMatrix frechet_derivative_n(const FunctionSpec &spec, const HermitianMatrix &a,
                                     const std::vector<HermitianMatrix> &directions);

/// Sampled lower bound for sup |||D^n f(A)(B_1..B_n)||| over unit-norm
/// direction tuples; the tuple (I/|||I|||, ...) is always included.
/// Sample i depends only on (seed, i), so enlarging the sample count
/// refines the bound monotonically.
double sample_multilinear_norm(const FunctionSpec &spec, const HermitianMatrix &a, int n,
                               const NormKind &kind, int samples, uint64_t seed);

/// f(A) X - X f(B).
ComplexMatrix commutator_map(const FunctionSpec &spec, const HermitianMatrix &a,
                             const HermitianMatrix &b, const ComplexMatrix &x);

/// A^nu X B^(1-nu) - A^(1-nu) X B^nu for positive definite A, B and any
/// real weight.
ComplexMatrix weighted_power_difference(const HermitianMatrix &a, const HermitianMatrix &b,
                                        const ComplexMatrix &x, double nu);

/// The Heinz-difference special case, with the weight pinned to [0, 1].
ComplexMatrix heinz_difference(const HermitianMatrix &a, const HermitianMatrix &b,
                               const ComplexMatrix &x, double nu);

} // namespace loewner
