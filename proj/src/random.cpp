#include "youngheinz/random.hpp"

#include <cmath>
#include <numbers>

#include "youngheinz/errors.hpp"

namespace yh {

namespace {
__extension__ using UInt128 = unsigned __int128;
}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view id, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed ^ fnv1a64(id)) + index);
}

double Rng::uniform() {
    return static_cast<double>(bits() >> 11) * 0x1.0p-53;
}

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::normal() {
    // Box-Muller; 1 - u keeps the log argument in (0, 1]
    const double u = 1.0 - uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) fail(ErrorCode::domain, "empty range");
    return static_cast<std::uint64_t>((static_cast<UInt128>(bits()) * n) >> 64);
}

Matrix random_matrix(std::size_t dim, Rng& rng, bool complex) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            const double re = rng.normal();
            const double im = complex ? rng.normal() : 0.0;
            m(i, j) = Complex(re, im);
        }
    return m;
}

Matrix random_unitary(std::size_t dim, Rng& rng, bool complex) {
    Matrix q = random_matrix(dim, rng, complex);
    // modified Gram-Schmidt on columns, twice for orthogonality to roundoff
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t c = 0; c < dim; ++c) {
            for (std::size_t prev = 0; prev < c; ++prev) {
                Complex dot = 0.0;
                for (std::size_t r = 0; r < dim; ++r) dot += std::conj(q(r, prev)) * q(r, c);
                for (std::size_t r = 0; r < dim; ++r) q(r, c) -= dot * q(r, prev);
            }
            double norm = 0.0;
            for (std::size_t r = 0; r < dim; ++r) norm += std::norm(q(r, c));
            norm = std::sqrt(norm);
            if (norm < 1e-8) fail(ErrorCode::accuracy, "random unitary: degenerate Gaussian sample");
            for (std::size_t r = 0; r < dim; ++r) q(r, c) /= norm;
        }
    }
    return q;
}

SpdMatrix random_spd(std::size_t dim, Rng& rng, double lo, double hi, bool complex) {
    if (!(lo > 0.0) || !(hi >= lo)) fail(ErrorCode::domain, "random_spd: need 0 < lo <= hi");
    const Matrix q = random_unitary(dim, rng, complex);
    std::vector<double> lambda(dim);
    for (double& l : lambda) l = rng.log_uniform(lo, hi);
    return SpdMatrix(reconstruct(q, lambda));
}

}  // namespace yh
