#include "loewner/norms.hpp"

#include "loewner/eig.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace loewner {

NormKind NormKind::schatten(double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("Schatten exponent must be >= 1, got " + std::to_string(p));
    NormKind k{NormTag::Schatten};
    k.p = p;
    return k;
}

NormKind NormKind::ky_fan(int k) {
    if (k < 1)
        throw std::invalid_argument("Ky Fan order must be >= 1, got " + std::to_string(k));
    NormKind n{NormTag::KyFan};
    n.k = k;
    return n;
}

NormKind NormKind::parse(const std::string &text) {
    if (text == "op")
        return operator_norm();
    if (text == "tr")
        return trace();
    if (text == "fro")
        return frobenius();
    if (text.rfind("s:", 0) == 0) {
        try {
            size_t used = 0;
            const double p = std::stod(text.substr(2), &used);
            if (used != text.size() - 2)
                throw std::invalid_argument(text);
            return schatten(p);
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("bad Schatten norm spec: \"" + text + "\"");
        }
    }
    if (text.rfind("kf:", 0) == 0) {
        try {
            size_t used = 0;
            const int k = std::stoi(text.substr(3), &used);
            if (used != text.size() - 3)
                throw std::invalid_argument(text);
            return ky_fan(k);
        } catch (const std::invalid_argument &) {
            throw std::invalid_argument("bad Ky Fan norm spec: \"" + text + "\"");
        }
    }
    throw std::invalid_argument("unknown norm kind \"" + text + "\" (want op|tr|fro|s:<p>|kf:<k>)");
}

std::string NormKind::str() const {
    switch (tag) {
    case NormTag::Operator:
        return "op";
    case NormTag::Trace:
        return "tr";
    case NormTag::Frobenius:
        return "fro";
    case NormTag::Schatten: {
        std::ostringstream os;
        os << "s:" << p;
        return os.str();
    }
    case NormTag::KyFan:
        return "kf:" + std::to_string(k);
    }
    return "?";
}

std::vector<double> singular_values(const ComplexMatrix &x) {
    std::vector<double> sv;
    if (x.is_hermitian_exact()) {
        const auto eig = eig_hermitian(HermitianMatrix(x));
        sv.reserve(eig.eigenvalues.size());
        for (double v : eig.eigenvalues)
            sv.push_back(std::abs(v));
    } else {
        const ComplexMatrix gram = x.adjoint() * x;
        // Gram products round off the exact conjugate symmetry; rebuild it.
        const int n = x.dim();
        ComplexMatrix h(n);
        for (int i = 0; i < n; ++i) {
            h(i, i) = Complex(gram(i, i).real(), 0.0);
            for (int j = i + 1; j < n; ++j) {
                const Complex avg = 0.5 * (gram(i, j) + std::conj(gram(j, i)));
                h(i, j) = avg;
                h(j, i) = std::conj(avg);
            }
        }
        const auto eig = eig_hermitian(HermitianMatrix(std::move(h)));
        sv.reserve(eig.eigenvalues.size());
        for (double v : eig.eigenvalues)
            sv.push_back(std::sqrt(std::max(v, 0.0)));
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

namespace {

double norm_from_singular_values(const std::vector<double> &sv, const NormKind &kind) {
    switch (kind.tag) {
    case NormTag::Operator:
        return sv.front();
    case NormTag::Trace: {
        double sum = 0.0;
        for (double s : sv)
            sum += s;
        return sum;
    }
    case NormTag::Frobenius: {
        double sum = 0.0;
        for (double s : sv)
            sum += s * s;
        return std::sqrt(sum);
    }
    case NormTag::Schatten: {
        if (!(kind.p >= 1.0))
            throw std::invalid_argument("Schatten exponent must be >= 1");
        double sum = 0.0;
        for (double s : sv)
            sum += std::pow(s, kind.p);
        return std::pow(sum, 1.0 / kind.p);
    }
    case NormTag::KyFan: {
        if (kind.k < 1 || kind.k > static_cast<int>(sv.size()))
            throw std::invalid_argument("Ky Fan order " + std::to_string(kind.k) +
                                        " out of range for dim " + std::to_string(sv.size()));
        double sum = 0.0;
        for (int i = 0; i < kind.k; ++i)
            sum += sv[i];
        return sum;
    }
    }
    throw std::logic_error("unreachable norm tag");
}

} // namespace

double norm(const ComplexMatrix &x, const NormKind &kind) {
    return norm_from_singular_values(singular_values(x), kind);
}

double norm(const HermitianMatrix &x, const NormKind &kind) {
    return norm(x.matrix(), kind);
}

double norm_identity(int dim, const NormKind &kind) {
    if (dim < 1)
        throw std::invalid_argument("norm_identity: dim must be positive");
    switch (kind.tag) {
    case NormTag::Operator:
        return 1.0;
    case NormTag::Trace:
        return static_cast<double>(dim);
    case NormTag::Frobenius:
        return std::sqrt(static_cast<double>(dim));
    case NormTag::Schatten:
        if (!(kind.p >= 1.0))
            throw std::invalid_argument("Schatten exponent must be >= 1");
        return std::pow(static_cast<double>(dim), 1.0 / kind.p);
    case NormTag::KyFan:
        if (kind.k < 1 || kind.k > dim)
            throw std::invalid_argument("Ky Fan order out of range");
        return static_cast<double>(kind.k);
    }
    throw std::logic_error("unreachable norm tag");
}

std::vector<NormKind> parse_norm_list(const std::string &csv) {
    std::vector<NormKind> kinds;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ','))
        if (!token.empty())
            kinds.push_back(NormKind::parse(token));
    if (kinds.empty())
        throw std::invalid_argument("empty norm list");
    return kinds;
}

} // namespace loewner
