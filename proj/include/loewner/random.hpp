#pragma once

#include "loewner/matrix.hpp"

#include <cstdint>
#include <random>

namespace loewner {

/// Deterministic RNG: mt19937_64 with explicit uniform/normal transforms so
/// the byte stream depends only on the seed, not on the standard library's
/// distribution internals.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller.
    double normal();

    Complex normal_complex() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

  private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stream-splitting: distinct (seed, index...) pairs give decorrelated seeds.
uint64_t derive_seed(uint64_t seed, uint64_t index);
uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b);

/// Haar-ish random unitary from Householder QR of a complex Gaussian matrix
/// (R-diagonal phases absorbed into Q).
ComplexMatrix random_unitary(int dim, Rng &rng);

/// Q diag(lambda) Q* with eigenvalues log-uniform in [lambda_lo, lambda_hi].
HermitianMatrix random_pd(int dim, double lambda_lo, double lambda_hi, uint64_t seed);

/// (G + G*)/2 for a complex Gaussian G.
HermitianMatrix random_hermitian(int dim, uint64_t seed);

/// Plain complex Gaussian matrix.
ComplexMatrix random_complex(int dim, uint64_t seed);

} // namespace loewner
