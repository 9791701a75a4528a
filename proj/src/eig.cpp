#include "loewner/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace loewner {

namespace {

double offdiag_mass(const ComplexMatrix &a) {
    const int n = a.dim();
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One plane rotation in the (p, q) plane.  The pivot a_pq = |a_pq| e^{i phi}
// is first made real by the phase diag(1, e^{-i phi}), then annihilated by
// the classic real Jacobi angle: tau = (a_qq - a_pp) / (2 |a_pq|),
// t the smaller root of t^2 + 2 tau t - 1 = 0.
void rotate(ComplexMatrix &a, ComplexMatrix &v, int p, int q) {
    const Complex apq = a(p, q);
    const double absb = std::abs(apq);
    if (absb == 0.0)
        return;
    const Complex phase = apq / absb;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * absb);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex cs = s * std::conj(phase); // J(q,p) = -cs, J(q,q) = c * conj(phase)
    const int n = a.dim();

    // A <- A J (columns p, q)
    for (int i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip - cs * aiq;
        a(i, q) = s * aip + (c * std::conj(phase)) * aiq;
    }
    // A <- J* A (rows p, q)
    for (int j = 0; j < n; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = c * apj - (s * phase) * aqj;
        a(q, j) = s * apj + (c * phase) * aqj;
    }
    // Pin what the rotation guarantees, against rounding drift.
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    // V <- V J
    for (int i = 0; i < n; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip - cs * viq;
        v(i, q) = s * vip + (c * std::conj(phase)) * viq;
    }
}

} // namespace

SpectralDecomposition eig_hermitian(const HermitianMatrix &input) {
    const int n = input.dim();
    ComplexMatrix a = input.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = a.frobenius_norm();
    const double stop = 1e-13 * scale;
    if (n > 1 && scale > 0.0) {
        constexpr int kMaxSweeps = 100;
        int sweep = 0;
        while (offdiag_mass(a) > stop) {
            if (++sweep > kMaxSweeps)
                throw ConvergenceError("Jacobi eigensolver did not converge in 100 sweeps");
            for (int p = 0; p < n - 1; ++p)
                for (int q = p + 1; q < n; ++q)
                    rotate(a, v, p, q);
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    out.unitary = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (int i = 0; i < n; ++i)
            out.unitary(i, k) = v(i, order[k]);
    }
    return out;
}

double lambda_min(const HermitianMatrix &a) {
    return eig_hermitian(a).eigenvalues.front();
}

double lambda_max_abs(const HermitianMatrix &a) {
    const auto ev = eig_hermitian(a).eigenvalues;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

bool is_positive_definite(const HermitianMatrix &a, double floor) {
    if (floor < 0.0)
        throw std::invalid_argument("positive-definiteness floor must be >= 0");
    return lambda_min(a) > floor;
}

bool is_positive_definite(const HermitianMatrix &a) {
    return is_positive_definite(a, 1e-10 * lambda_max_abs(a));
}

} // namespace loewner
