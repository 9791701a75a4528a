#include "loewner/calculus.hpp"

#include "loewner/random.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace loewner {

namespace {

void require_spectrum_in_domain(const FunctionSpec &spec, const std::vector<double> &eigenvalues) {
    for (double lambda : eigenvalues)
        if (!spec.in_domain(lambda)) {
            std::ostringstream os;
            os << "spectrum of the argument leaves the domain of \"" << spec.id << "\": eigenvalue "
               << lambda << " not > " << spec.domain_lo;
            throw DomainError(os.str());
        }
}

// Divided differences over eigenvalue indices, memoized on the sorted index
// tuple so repeated eigenvalues hit the confluent branch consistently.
class DividedDifferenceTable {
  public:
    DividedDifferenceTable(const FunctionSpec &spec, const std::vector<double> &eigenvalues)
        : spec_(spec), eigenvalues_(eigenvalues) {}

    double operator()(std::array<int, 4> idx, int order) {
        std::sort(idx.begin(), idx.begin() + order + 1);
        for (int k = order + 1; k < 4; ++k)
            idx[k] = -1;
        auto it = cache_.find(idx);
        if (it != cache_.end())
            return it->second;
        std::vector<double> pts(order + 1);
        for (int k = 0; k <= order; ++k)
            pts[k] = eigenvalues_[idx[k]];
        const double value = divided_difference(spec_, std::move(pts));
        cache_.emplace(idx, value);
        return value;
    }

  private:
    const FunctionSpec &spec_;
    const std::vector<double> &eigenvalues_;
    std::map<std::array<int, 4>, double> cache_;
};

} // namespace

LoewnerMatrix loewner_matrix(const FunctionSpec &spec, const std::vector<double> &eigenvalues) {
    require_spectrum_in_domain(spec, eigenvalues);
    const int n = static_cast<int>(eigenvalues.size());
    LoewnerMatrix loewner;
    loewner.base_eigenvalues = eigenvalues;
    loewner.entries.assign(static_cast<size_t>(n) * n, 0.0);
    DividedDifferenceTable table(spec, eigenvalues);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            const double v = table({i, j, -1, -1}, 1);
            loewner.entries[static_cast<size_t>(i) * n + j] = v;
            loewner.entries[static_cast<size_t>(j) * n + i] = v;
        }
    return loewner;
}

HermitianMatrix matrix_function(const FunctionSpec &spec, const HermitianMatrix &a) {
    return matrix_function_deriv(spec, 0, a);
}

HermitianMatrix matrix_function_deriv(const FunctionSpec &spec, int n, const HermitianMatrix &a) {
    const SpectralDecomposition eig = eig_hermitian(a);
    require_spectrum_in_domain(spec, eig.eigenvalues);
    std::vector<double> mapped(eig.eigenvalues.size());
    for (size_t i = 0; i < mapped.size(); ++i)
        mapped[i] = spec.deriv(n, eig.eigenvalues[i]);
    return HermitianMatrix(from_spectral(eig.unitary, mapped));
}

double op_norm_fn_deriv(const FunctionSpec &spec, int n, const std::vector<double> &eigenvalues) {
    require_spectrum_in_domain(spec, eigenvalues);
    double best = 0.0;
    for (double lambda : eigenvalues)
        best = std::max(best, std::abs(spec.deriv(n, lambda)));
    return best;
}

double op_norm_fn_deriv(const FunctionSpec &spec, int n, const HermitianMatrix &a) {
    return op_norm_fn_deriv(spec, n, eig_hermitian(a).eigenvalues);
}

HermitianMatrix frechet_derivative(const FunctionSpec &spec, const HermitianMatrix &a,
                                   const HermitianMatrix &b) {
    return frechet_derivative_n(spec, a, {b});
}

HermitianMatrix frechet_derivative_n(const FunctionSpec &spec, const HermitianMatrix &a,
                                     const std::vector<HermitianMatrix> &directions) {
    const int order = static_cast<int>(directions.size());
    if (order < 1 || order > 3)
        throw std::invalid_argument("frechet_derivative_n supports orders 1..3");
    for (const auto &dir : directions)
        require_same_dim(a.matrix(), dir.matrix(), "frechet_derivative_n");

    const SpectralDecomposition eig = eig_hermitian(a);
    require_spectrum_in_domain(spec, eig.eigenvalues);
    const int n = a.dim();

    std::vector<ComplexMatrix> rotated;
    rotated.reserve(order);
    for (const auto &dir : directions)
        rotated.push_back(rotate_to_eigenbasis(eig.unitary, dir.matrix()));

    DividedDifferenceTable table(spec, eig.eigenvalues);
    ComplexMatrix core(n);

    if (order == 1) {
        const ComplexMatrix &b = rotated[0];
        for (int i = 0; i < n; ++i) {
            core(i, i) = Complex(table({i, i, -1, -1}, 1) * b(i, i).real(), 0.0);
            for (int j = i + 1; j < n; ++j) {
                core(i, j) = table({i, j, -1, -1}, 1) * b(i, j);
                core(j, i) = std::conj(core(i, j));
            }
        }
    } else if (order == 2) {
        const ComplexMatrix &b1 = rotated[0];
        const ComplexMatrix &b2 = rotated[1];
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Complex sum{};
                for (int k = 0; k < n; ++k)
                    sum += table({i, k, j, -1}, 2) * (b1(i, k) * b2(k, j) + b2(i, k) * b1(k, j));
                if (j == i) {
                    core(i, i) = Complex(sum.real(), 0.0);
                } else {
                    core(i, j) = sum;
                    core(j, i) = std::conj(sum);
                }
            }
    } else {
        static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Complex sum{};
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        const double dd = table({i, k, l, j}, 3);
                        if (dd == 0.0)
                            continue;
                        Complex perm_sum{};
                        for (const auto &p : kPerms)
                            perm_sum += rotated[p[0]](i, k) * rotated[p[1]](k, l) * rotated[p[2]](l, j);
                        sum += dd * perm_sum;
                    }
                if (j == i) {
                    core(i, i) = Complex(sum.real(), 0.0);
                } else {
                    core(i, j) = sum;
                    core(j, i) = std::conj(sum);
                }
            }
    }

    return HermitianMatrix(conjugate_hermitian(eig.unitary, core));
}

double sample_multilinear_norm(const FunctionSpec &spec, const HermitianMatrix &a, int n,
                               const NormKind &kind, int samples, uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("sample_multilinear_norm needs samples >= 1");
    if (n < 1 || n > 3)
        throw std::invalid_argument("sample_multilinear_norm supports orders 1..3");
    const int dim = a.dim();

    const double id_norm = norm_identity(dim, kind);
    const HermitianMatrix unit_identity =
        HermitianMatrix(Complex(1.0 / id_norm, 0.0) * ComplexMatrix::identity(dim));
    std::vector<HermitianMatrix> dirs(static_cast<size_t>(n), unit_identity);
    double best = norm(frechet_derivative_n(spec, a, dirs), kind);

    for (int s = 0; s < samples; ++s) {
        dirs.clear();
        for (int k = 0; k < n; ++k) {
            HermitianMatrix h = random_hermitian(dim, derive_seed(seed, s, k));
            const double hn = norm(h, kind);
            if (hn == 0.0) {
                h = unit_identity;
            } else {
                h = (1.0 / hn) * h;
            }
            dirs.push_back(std::move(h));
        }
        best = std::max(best, norm(frechet_derivative_n(spec, a, dirs), kind));
    }
    return best;
}

ComplexMatrix commutator_map(const FunctionSpec &spec, const HermitianMatrix &a,
                             const HermitianMatrix &b, const ComplexMatrix &x) {
    require_same_dim(a.matrix(), x, "commutator_map");
    require_same_dim(b.matrix(), x, "commutator_map");
    const ComplexMatrix fa = matrix_function(spec, a).matrix();
    const ComplexMatrix fb = matrix_function(spec, b).matrix();
    return fa * x - x * fb;
}

ComplexMatrix heinz_difference(const HermitianMatrix &a, const HermitianMatrix &b,
                               const ComplexMatrix &x, double nu) {
    if (!(nu >= 0.0 && nu <= 1.0))
        throw std::invalid_argument("heinz_difference needs nu in [0, 1]");
    return weighted_power_difference(a, b, x, nu);
}

ComplexMatrix weighted_power_difference(const HermitianMatrix &a, const HermitianMatrix &b,
                                        const ComplexMatrix &x, double nu) {
    const FunctionSpec f_nu = power_function(nu);
    const FunctionSpec f_conu = power_function(1.0 - nu);
    const ComplexMatrix a_nu = matrix_function(f_nu, a).matrix();
    const ComplexMatrix a_conu = matrix_function(f_conu, a).matrix();
    const ComplexMatrix b_nu = matrix_function(f_nu, b).matrix();
    const ComplexMatrix b_conu = matrix_function(f_conu, b).matrix();
    return a_nu * x * b_conu - a_conu * x * b_nu;
}

} // namespace loewner
