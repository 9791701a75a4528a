"""Matrix-function calculus, unitarily invariant norms, and numerical
verification of operator norm inequalities on Hermitian matrices."""

from ._core import (
    ConvergenceError,
    DomainError,
    check_commutator_bounds,
    check_frechet_norm_bound,
    check_hh_weighted,
    check_perturbation,
    check_product_hh,
    check_product_perturbation,
    check_quasiconvex_fn_norm,
    check_simpson,
    commutator_map,
    divided_difference,
    eig_hermitian,
    fn_eval,
    fn_info,
    frechet_derivative,
    frechet_derivative_n,
    heinz_difference,
    hh_integral,
    is_positive_definite,
    matrix_function,
    mean_defect_residual,
    measure_derivative,
    norm,
    norm_identity,
    random_pd,
    read_matrix,
    run_sweep,
    sample_multilinear_norm,
    schur_product,
    simpson_13,
    simpson_38,
    weight_moments,
    weighted_power_difference,
    write_matrix,
)

__all__ = [
    "ConvergenceError",
    "DomainError",
    "check_commutator_bounds",
    "check_frechet_norm_bound",
    "check_hh_weighted",
    "check_perturbation",
    "check_product_hh",
    "check_product_perturbation",
    "check_quasiconvex_fn_norm",
    "check_simpson",
    "commutator_map",
    "divided_difference",
    "eig_hermitian",
    "fn_eval",
    "fn_info",
    "frechet_derivative",
    "frechet_derivative_n",
    "heinz_difference",
    "hh_integral",
    "is_positive_definite",
    "matrix_function",
    "mean_defect_residual",
    "measure_derivative",
    "norm",
    "norm_identity",
    "random_pd",
    "read_matrix",
    "run_sweep",
    "sample_multilinear_norm",
    "schur_product",
    "simpson_13",
    "simpson_38",
    "weight_moments",
    "weighted_power_difference",
    "write_matrix",
]
