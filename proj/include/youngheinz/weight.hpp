#pragma once

#include <cstdint>
#include <optional>

namespace yh {

/// nu = numerator / 2^log2_denominator, stored reduced (odd numerator unless zero).
struct DyadicRational {
    std::uint64_t numerator = 0;
    int log2_denominator = 0;

    friend bool operator==(const DyadicRational&, const DyadicRational&) = default;
};

/// Integer and fractional part of 2^j * nu.
struct ScaledWeight {
    std::int64_t whole = 0;
    double fraction = 0.0;  // in [0, 1)
};

/// Distance below which 2^j * nu is treated as the nearest integer when the
/// weight has no exact dyadic form.
inline constexpr double kDyadicSnap = 1e-12;

/// A nonnegative weight. Weights built with `dyadic` keep their exact form
/// through integer affine maps, so floor(2^j nu) never misclassifies a
/// dyadic point.
class Weight {
public:
    explicit Weight(double value);
    static Weight dyadic(std::uint64_t numerator, int log2_denominator);

    double value() const noexcept { return value_; }
    const std::optional<DyadicRational>& exact() const noexcept { return exact_; }

    /// offset + slope * nu. Throws a domain error if the result is negative.
    Weight affine(std::int64_t offset, std::int64_t slope) const;
    Weight complement() const { return affine(1, -1); }
    Weight doubled() const { return affine(0, 2); }

    ScaledWeight scaled(int j) const;

    /// True when 2^j * nu is an integer (after snapping).
    bool on_grid(int j) const { return scaled(j).fraction == 0.0; }

    void require_unit_interval(const char* what) const;
    void require_within(double lo, double hi, const char* what) const;

private:
    Weight() = default;

    double value_ = 0.0;
    std::optional<DyadicRational> exact_;
};

}  // namespace yh
