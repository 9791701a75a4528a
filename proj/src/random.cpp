#include "loewner/random.hpp"

#include <cmath>
#include <numbers>

namespace loewner {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform01(); // (0, 1], keeps the log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

uint64_t derive_seed(uint64_t seed, uint64_t index) {
    // splitmix64 finalizer over the combined state
    uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
    return derive_seed(derive_seed(seed, a), b);
}

namespace {

ComplexMatrix gaussian_matrix(int dim, Rng &rng) {
    ComplexMatrix g(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            g(i, j) = rng.normal_complex();
    return g;
}

} // namespace

ComplexMatrix random_unitary(int dim, Rng &rng) {
    ComplexMatrix a = gaussian_matrix(dim, rng);
    const int n = dim;
    std::vector<std::vector<Complex>> reflectors;
    reflectors.reserve(n);

    for (int k = 0; k < n; ++k) {
        std::vector<Complex> v(n - k);
        double norm_x = 0.0;
        for (int i = k; i < n; ++i) {
            v[i - k] = a(i, k);
            norm_x += std::norm(a(i, k));
        }
        norm_x = std::sqrt(norm_x);
        if (norm_x == 0.0) {
            reflectors.emplace_back();
            continue;
        }
        const Complex x0 = v[0];
        const Complex phase = (std::abs(x0) == 0.0) ? Complex(1.0, 0.0) : x0 / std::abs(x0);
        v[0] += phase * norm_x; // reflect onto -phase * norm_x * e1
        double vn = 0.0;
        for (const Complex &z : v)
            vn += std::norm(z);
        vn = std::sqrt(vn);
        if (vn == 0.0) {
            reflectors.emplace_back();
            continue;
        }
        for (Complex &z : v)
            z /= vn;
        // A[k:, k:] -= 2 v (v* A[k:, k:])
        for (int j = k; j < n; ++j) {
            Complex dot{};
            for (int i = k; i < n; ++i)
                dot += std::conj(v[i - k]) * a(i, j);
            for (int i = k; i < n; ++i)
                a(i, j) -= 2.0 * v[i - k] * dot;
        }
        reflectors.push_back(std::move(v));
    }

    // Q = H_0 H_1 ... H_{n-1} I
    ComplexMatrix q = ComplexMatrix::identity(n);
    for (int k = n - 1; k >= 0; --k) {
        const auto &v = reflectors[k];
        if (v.empty())
            continue;
        for (int j = 0; j < n; ++j) {
            Complex dot{};
            for (int i = k; i < n; ++i)
                dot += std::conj(v[i - k]) * q(i, j);
            for (int i = k; i < n; ++i)
                q(i, j) -= 2.0 * v[i - k] * dot;
        }
    }

    // Absorb R's diagonal phases so the distribution is Haar.
    for (int k = 0; k < n; ++k) {
        const Complex d = a(k, k);
        const double ad = std::abs(d);
        const Complex phase = (ad == 0.0) ? Complex(1.0, 0.0) : d / ad;
        for (int i = 0; i < n; ++i)
            q(i, k) *= phase;
    }
    return q;
}

HermitianMatrix random_pd(int dim, double lambda_lo, double lambda_hi, uint64_t seed) {
    if (!(lambda_lo > 0.0) || !(lambda_hi >= lambda_lo))
        throw std::invalid_argument("random_pd: need 0 < lambda_lo <= lambda_hi");
    Rng rng(seed);
    const double log_lo = std::log(lambda_lo);
    const double log_hi = std::log(lambda_hi);
    std::vector<double> values(dim);
    for (int i = 0; i < dim; ++i)
        values[i] = std::exp(log_lo + (log_hi - log_lo) * rng.uniform01());
    const ComplexMatrix q = random_unitary(dim, rng);
    return HermitianMatrix(from_spectral(q, values));
}

HermitianMatrix random_hermitian(int dim, uint64_t seed) {
    Rng rng(seed);
    const ComplexMatrix g = gaussian_matrix(dim, rng);
    ComplexMatrix h(dim);
    for (int i = 0; i < dim; ++i) {
        h(i, i) = Complex(g(i, i).real(), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const Complex avg = 0.5 * (g(i, j) + std::conj(g(j, i)));
            h(i, j) = avg;
            h(j, i) = std::conj(avg);
        }
    }
    return HermitianMatrix(std::move(h));
}

ComplexMatrix random_complex(int dim, uint64_t seed) {
    Rng rng(seed);
    return gaussian_matrix(dim, rng);
}

} // namespace loewner
