#include "youngheinz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "youngheinz/errors.hpp"

namespace yh {

NormKind NormKind::schatten(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) fail(ErrorCode::domain, "Schatten norm needs finite p >= 1");
    return NormKind(Tag::schatten, p, 0);
}

NormKind NormKind::ky_fan(int k) {
    if (k < 1) fail(ErrorCode::domain, "Ky Fan norm needs k >= 1");
    return NormKind(Tag::ky_fan, 0.0, k);
}

NormKind NormKind::parse(std::string_view text) {
    if (text == "spectral") return spectral();
    if (text == "trace") return trace();
    if (text == "frobenius") return frobenius();
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string head(text.substr(0, colon));
        const std::string arg(text.substr(colon + 1));
        try {
            std::size_t used = 0;
            if (head == "schatten") {
                const double p = std::stod(arg, &used);
                if (used == arg.size()) return schatten(p);
            } else if (head == "ky_fan") {
                const int k = std::stoi(arg, &used);
                if (used == arg.size()) return ky_fan(k);
            }
        } catch (const std::logic_error&) {
        }
    }
    fail(ErrorCode::usage, "unknown norm '" + std::string(text) + "'");
}

std::string NormKind::name() const {
    std::ostringstream os;
    switch (tag_) {
        case Tag::schatten: os << "schatten:" << p_; break;
        case Tag::ky_fan: os << "ky_fan:" << k_; break;
        case Tag::spectral: os << "spectral"; break;
        case Tag::trace: os << "trace"; break;
        case Tag::frobenius: os << "frobenius"; break;
    }
    return os.str();
}

std::vector<double> singular_values(const Matrix& x) {
    const auto eig = eig_hermitian(HermitianMatrix::symmetrize(x.adjoint() * x));
    std::vector<double> sigma(eig.values.rbegin(), eig.values.rend());
    for (double& s : sigma) s = std::sqrt(std::max(s, 0.0));
    return sigma;
}

double norm(const Matrix& x, const NormKind& kind) {
    if (kind.tag() == NormKind::Tag::frobenius) return x.frobenius_norm();
    const std::vector<double> sigma = singular_values(x);
    switch (kind.tag()) {
        case NormKind::Tag::spectral:
            return sigma.front();
        case NormKind::Tag::trace:
            return std::accumulate(sigma.begin(), sigma.end(), 0.0);
        case NormKind::Tag::ky_fan: {
            if (static_cast<std::size_t>(kind.k()) > sigma.size())
                fail(ErrorCode::domain, "Ky Fan index exceeds the dimension");
            return std::accumulate(sigma.begin(), sigma.begin() + kind.k(), 0.0);
        }
        case NormKind::Tag::schatten: {
            const double top = sigma.front();
            if (top == 0.0) return 0.0;
            double sum = 0.0;
            for (double s : sigma) sum += std::pow(s / top, kind.p());
            return top * std::pow(sum, 1.0 / kind.p());
        }
        case NormKind::Tag::frobenius:
            break;
    }
    return x.frobenius_norm();
}

}  // namespace yh
