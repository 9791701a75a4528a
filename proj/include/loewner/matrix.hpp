#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace loewner {

using Complex = std::complex<double>;

/// Input spectrum lies outside the domain of the requested scalar function
/// (e.g. log of a matrix that is not positive definite).
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An iterative kernel (eigensolver, adaptive quadrature) exhausted its cap.
class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dense square complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim) : dim_(check_dim(dim)), entries_(static_cast<size_t>(dim) * dim) {}
    ComplexMatrix(int dim, std::vector<Complex> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    Complex &operator()(int i, int j) { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const Complex &operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<Complex> &entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    double frobenius_norm() const;
    bool all_finite() const;
    /// Bitwise test for exact conjugate symmetry (entries produced by this
    /// library's Hermitian paths satisfy it exactly).
    bool is_hermitian_exact() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix m) { return m *= scalar; }
    friend ComplexMatrix operator*(ComplexMatrix m, Complex scalar) { return m *= scalar; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);
    friend bool operator==(const ComplexMatrix &lhs, const ComplexMatrix &rhs) = default;

  private:
    static int check_dim(int dim);

    int dim_ = 0;
    std::vector<Complex> entries_;
};

/// Entrywise (Schur/Hadamard) product. Throws on dimension mismatch.
ComplexMatrix schur_product(const ComplexMatrix &x, const ComplexMatrix &y);

void require_same_dim(const ComplexMatrix &x, const ComplexMatrix &y, const char *what);

/// Complex matrix certified Hermitian.  Construction rejects inputs whose
/// skew part exceeds 1e-10 * (1 + ||M||_F); inputs within tolerance are
/// replaced by (M + M*)/2, which is exactly Hermitian in floating point.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(ComplexMatrix m);

    int dim() const { return mat_.dim(); }
    const ComplexMatrix &matrix() const { return mat_; }
    const Complex &operator()(int i, int j) const { return mat_(i, j); }
    bool symmetrized() const { return symmetrized_; }

    friend HermitianMatrix operator+(const HermitianMatrix &a, const HermitianMatrix &b) {
        return HermitianMatrix(a.mat_ + b.mat_);
    }
    friend HermitianMatrix operator-(const HermitianMatrix &a, const HermitianMatrix &b) {
        return HermitianMatrix(a.mat_ - b.mat_);
    }
    friend HermitianMatrix operator*(double scalar, const HermitianMatrix &a) {
        return HermitianMatrix(Complex(scalar, 0.0) * a.mat_);
    }

  private:
    ComplexMatrix mat_;
    bool symmetrized_ = false;
};

/// Eigensystem of a Hermitian matrix: A = U diag(eigenvalues) U*,
/// eigenvalues ascending, U unitary.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix unitary;
};

/// U diag(values) U* assembled so the result is exactly Hermitian.
ComplexMatrix from_spectral(const ComplexMatrix &unitary, const std::vector<double> &values);

/// U X U* for Hermitian X, mirrored so the result stays exactly Hermitian.
ComplexMatrix conjugate_hermitian(const ComplexMatrix &unitary, const ComplexMatrix &x);

/// U* X U (rotation of X into the eigenbasis whose vectors are U's columns).
ComplexMatrix rotate_to_eigenbasis(const ComplexMatrix &unitary, const ComplexMatrix &x);

} // namespace loewner
