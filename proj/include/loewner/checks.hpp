#pragma once

#include "loewner/quadrature.hpp"

#include <map>
#include <optional>

namespace loewner {

/// Inputs that reproduce one inequality evaluation.
struct Witness {
    uint64_t seed = 0;
    int dim = 0;
    std::vector<std::string> functions;
    std::map<std::string, double> params;
    std::string norm;
};

/// One inequality evaluation.  pass <=> margin >= -1e-8 * (1 + |rhs|).
/// A non-empty error means the check aborted before producing values; such
/// reports never pass.
struct IneqReport {
    std::string check_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = false;
    bool expected_fail = false;
    std::string error;
    Witness witness;
};

IneqReport make_report(std::string check_id, double lhs, double rhs, Witness witness,
                       bool expected_fail = false);

enum class HHMode { Convex, QuasiConvex, SConvex };
enum class PerturbMode { Convex, QuasiConvex, SConvex, Refinement };
enum class CommutatorVariant { Product, Function, Heinz, KapilPower, KapilWeighted, PowerLowerBound };
enum class SimpsonRule { OneThird, ThreeEighth };

struct CommutatorParams {
    double nu = 0.5;    // Heinz, KapilWeighted
    double r = 0.5;     // KapilPower
    double alpha = 1.0; // KapilWeighted, PowerLowerBound
};

/// ||f^(n)((1-nu)A + nu B)|| <= max{||f^(n)(A)||, ||f^(n)(B)||}, operator
/// norms.  n = 0 checks the norm of f itself.  Requires an operator
/// monotone spec for n >= 1 (or expect_fail for counterexamples).
IneqReport check_quasiconvex_fn_norm(const FunctionSpec &spec, const HermitianMatrix &a,
                                     const HermitianMatrix &b, double nu, int n,
                                     bool expect_fail = false);

/// Sampled |||D^n f(A)||| <= ||f^(n)(A)||.
IneqReport check_frechet_norm_bound(const FunctionSpec &spec, const HermitianMatrix &a, int n,
                                    const NormKind &kind, int samples, uint64_t seed);

/// Weighted Hermite-Hadamard defect bounds.  Convex and s-convex modes are
/// operator-norm statements; the quasi-convex mode runs in any unitarily
/// invariant norm for operator monotone specs and in the operator norm for
/// specs with convex ||f'(.)||.  s is consulted only in s-convex mode and
/// must match the spec's declared exponent.
IneqReport check_hh_weighted(const FunctionSpec &spec, const HermitianMatrix &a,
                             const HermitianMatrix &b, double nu, HHMode mode, double s,
                             const NormKind &kind);

/// Product rule variant for two operator monotone functions.
IneqReport check_product_hh(const FunctionSpec &f, const FunctionSpec &g, const HermitianMatrix &a,
                            const HermitianMatrix &b, double nu, const NormKind &kind);

/// |||f(A)g(A) - f(B)g(B)||| against the endpoint-weighted consequence of
/// the product bound.
IneqReport check_product_perturbation(const FunctionSpec &f, const FunctionSpec &g,
                                      const HermitianMatrix &a, const HermitianMatrix &b,
                                      const NormKind &kind);

/// Commutator-type bounds; f is consulted for the Product and Function
/// variants, g for Product only.
IneqReport check_commutator_bounds(const std::optional<FunctionSpec> &f,
                                   const std::optional<FunctionSpec> &g, const HermitianMatrix &a,
                                   const HermitianMatrix &b, const ComplexMatrix &x,
                                   const NormKind &kind, CommutatorVariant variant,
                                   const CommutatorParams &params);

/// Bounds for |||f(B) - f(A)|||.  Refinement mode reports the comparison
/// f'(a) - max{||f'(A)||, ||f'(B)||} with a = min eigenvalue across both
/// endpoints, and stashes the plain perturbation margin in the witness.
IneqReport check_perturbation(const FunctionSpec &spec, const HermitianMatrix &a,
                              const HermitianMatrix &b, PerturbMode mode, double s,
                              const NormKind &kind);

/// Simpson estimate vs the reference segment integral, constant 5/32 for the
/// 1/3 rule and 25/288 for the 3/8 rule.
IneqReport check_simpson(const FunctionSpec &spec, const HermitianMatrix &a,
                         const HermitianMatrix &b, SimpsonRule rule, const NormKind &kind);

struct SweepConfig {
    std::vector<int> dims{2, 3, 4, 5, 6};
    int samples = 100;
    uint64_t seed = 42;
    std::vector<std::string> functions{"pow:0.5", "pow:0.3", "log", "pow:1.5", "square_minus_one"};
    std::vector<NormKind> norms{NormKind::operator_norm(), NormKind::trace(), NormKind::frobenius()};
    std::vector<double> nu_grid{0.0, 0.25, 0.5, 0.75, 1.0};
    double spectrum_lo = 0.1;
    double spectrum_hi = 10.0;
    /// Direction draws per sampled multilinear-norm evaluation.
    int direction_samples = 16;
};

void validate(const SweepConfig &config);

/// Deterministic cartesian sweep of every applicable checker.  Per-check
/// errors are converted into failed reports; the sweep itself never aborts.
/// Output is sorted by a canonical key.
std::vector<IneqReport> run_sweep(const SweepConfig &config);

struct SweepSummary {
    int passed = 0;
    int expected_failed = 0;
    int unexpected = 0; // failed without expect_fail, or expect_fail that passed

    int total() const { return passed + expected_failed + unexpected; }
};

SweepSummary summarize(const std::vector<IneqReport> &reports);

} // namespace loewner
