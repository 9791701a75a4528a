#include "loewner/matrix.hpp"

#include <cmath>
#include <utility>

namespace loewner {

int ComplexMatrix::check_dim(int dim) {
    if (dim <= 0)
        throw std::invalid_argument("matrix dimension must be positive, got " + std::to_string(dim));
    return dim;
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<Complex> entries)
    : dim_(check_dim(dim)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<size_t>(dim_) * dim_)
        throw std::invalid_argument("entry count does not match dim*dim");
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            out(j, i) = std::conj((*this)(i, j));
    return out;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex &z : entries_)
        sum += std::norm(z);
    return std::sqrt(sum);
}

bool ComplexMatrix::all_finite() const {
    for (const Complex &z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

bool ComplexMatrix::is_hermitian_exact() const {
    for (int i = 0; i < dim_; ++i) {
        if ((*this)(i, i).imag() != 0.0)
            return false;
        for (int j = i + 1; j < dim_; ++j)
            if ((*this)(i, j) != std::conj((*this)(j, i)))
                return false;
    }
    return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "matrix addition");
    for (size_t i = 0; i < entries_.size(); ++i)
        entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs, "matrix subtraction");
    for (size_t i = 0; i < entries_.size(); ++i)
        entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scalar) {
    for (Complex &z : entries_)
        z *= scalar;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs, rhs, "matrix product");
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{})
                continue;
            for (int j = 0; j < n; ++j)
                out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix schur_product(const ComplexMatrix &x, const ComplexMatrix &y) {
    require_same_dim(x, y, "Schur product");
    const int n = x.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = x(i, j) * y(i, j);
    return out;
}

void require_same_dim(const ComplexMatrix &x, const ComplexMatrix &y, const char *what) {
    if (x.dim() != y.dim())
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(x.dim()) +
                                    " vs " + std::to_string(y.dim()) + ")");
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m) : mat_(std::move(m)) {
    if (!mat_.all_finite())
        throw std::invalid_argument("Hermitian matrix has non-finite entries");
    if (mat_.is_hermitian_exact())
        return;
    const int n = mat_.dim();
    double skew = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex d = mat_(i, j) - std::conj(mat_(j, i));
            skew += std::norm(d);
        }
    skew = std::sqrt(skew);
    const double tol = 1e-10 * (1.0 + mat_.frobenius_norm());
    if (skew > tol)
        throw std::invalid_argument("matrix is not Hermitian: ||M - M*||_F = " + std::to_string(skew) +
                                    " exceeds tolerance " + std::to_string(tol));
    // (M + M*)/2, mirrored so conjugate symmetry holds bit for bit.
    for (int i = 0; i < n; ++i) {
        mat_(i, i) = Complex(mat_(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (mat_(i, j) + std::conj(mat_(j, i)));
            mat_(i, j) = avg;
            mat_(j, i) = std::conj(avg);
        }
    }
    symmetrized_ = true;
}

ComplexMatrix from_spectral(const ComplexMatrix &unitary, const std::vector<double> &values) {
    const int n = unitary.dim();
    if (values.size() != static_cast<size_t>(n))
        throw std::invalid_argument("from_spectral: value count does not match dimension");
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        double diag = 0.0;
        for (int k = 0; k < n; ++k)
            diag += values[k] * std::norm(unitary(i, k));
        out(i, i) = diag;
        for (int j = i + 1; j < n; ++j) {
            Complex sum{};
            for (int k = 0; k < n; ++k)
                sum += values[k] * (unitary(i, k) * std::conj(unitary(j, k)));
            out(i, j) = sum;
            out(j, i) = std::conj(sum);
        }
    }
    return out;
}

ComplexMatrix conjugate_hermitian(const ComplexMatrix &unitary, const ComplexMatrix &x) {
    require_same_dim(unitary, x, "conjugate_hermitian");
    const ComplexMatrix ux = unitary * x;
    const int n = x.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        Complex diag{};
        for (int k = 0; k < n; ++k)
            diag += ux(i, k) * std::conj(unitary(i, k));
        out(i, i) = Complex(diag.real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            Complex sum{};
            for (int k = 0; k < n; ++k)
                sum += ux(i, k) * std::conj(unitary(j, k));
            out(i, j) = sum;
            out(j, i) = std::conj(sum);
        }
    }
    return out;
}

ComplexMatrix rotate_to_eigenbasis(const ComplexMatrix &unitary, const ComplexMatrix &x) {
    require_same_dim(unitary, x, "rotate_to_eigenbasis");
    const ComplexMatrix xu = x * unitary;
    const int n = x.dim();
    ComplexMatrix out(n);
    const bool hermitian_in = x.is_hermitian_exact();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (hermitian_in && j < i) {
                out(i, j) = std::conj(out(j, i));
                continue;
            }
            Complex sum{};
            for (int k = 0; k < n; ++k)
                sum += std::conj(unitary(k, i)) * xu(k, j);
            if (hermitian_in && i == j)
                sum = Complex(sum.real(), 0.0);
            out(i, j) = sum;
        }
    return out;
}

} // namespace loewner
