#pragma once

#include "loewner/matrix.hpp"

#include <string>
#include <vector>

namespace loewner {

enum class NormTag { Operator, Trace, Frobenius, Schatten, KyFan };

/// Tagged choice of unitarily invariant norm.  String grammar:
/// "op", "tr", "fro", "s:<p>" (p >= 1), "kf:<k>" (1 <= k <= dim at call time).
struct NormKind {
    NormTag tag = NormTag::Operator;
    double p = 2.0; // Schatten exponent
    int k = 1;      // Ky Fan order

    static NormKind operator_norm() { return {NormTag::Operator}; }
    static NormKind trace() { return {NormTag::Trace}; }
    static NormKind frobenius() { return {NormTag::Frobenius}; }
    static NormKind schatten(double p);
    static NormKind ky_fan(int k);
    static NormKind parse(const std::string &text);

    std::string str() const;

    friend bool operator==(const NormKind &, const NormKind &) = default;
};

/// Singular values, descending.  For bitwise-Hermitian input these are the
/// absolute eigenvalues; otherwise square roots of the spectrum of X*X.
std::vector<double> singular_values(const ComplexMatrix &x);

double norm(const ComplexMatrix &x, const NormKind &kind);
double norm(const HermitianMatrix &x, const NormKind &kind);

/// Norm of the dim x dim identity, in closed form.
double norm_identity(int dim, const NormKind &kind);

std::vector<NormKind> parse_norm_list(const std::string &csv);

} // namespace loewner
