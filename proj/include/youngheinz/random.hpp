#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "youngheinz/matrix.hpp"

namespace yh {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t fnv1a64(std::string_view text) noexcept;
/// Seed for trial `index` of entry `id` under the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view id, std::uint64_t index) noexcept;

/// Deterministic across platforms: the engine is fully specified and every
/// distribution below is computed here rather than by the standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t bits() { return engine_(); }
    /// Uniform on [0, 1), multiples of 2^-53.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi);
    double normal();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    bool coin() { return (bits() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Haar-like random unitary (real orthogonal when `complex` is false).
Matrix random_unitary(std::size_t dim, Rng& rng, bool complex);
/// Q diag(lambda) Q* with log-uniform eigenvalues in [lo, hi].
SpdMatrix random_spd(std::size_t dim, Rng& rng, double lo, double hi, bool complex);
/// Gaussian matrix.
Matrix random_matrix(std::size_t dim, Rng& rng, bool complex);

}  // namespace yh
