#pragma once

#include "loewner/matrix.hpp"

namespace loewner {

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.  Sweeps until the off-diagonal Frobenius mass drops below
/// 1e-13 * ||A||_F, capped at 100 sweeps (ConvergenceError past the cap).
/// Deterministic: identical input bits give identical output bits.
SpectralDecomposition eig_hermitian(const HermitianMatrix &a);

double lambda_min(const HermitianMatrix &a);
double lambda_max_abs(const HermitianMatrix &a);

/// True iff lambda_min(A) > floor.  floor must be >= 0.
bool is_positive_definite(const HermitianMatrix &a, double floor);

/// Default floor: 1e-10 * max_i |lambda_i(A)|.
bool is_positive_definite(const HermitianMatrix &a);

} // namespace loewner
