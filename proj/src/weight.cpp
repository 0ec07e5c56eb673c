#include "youngheinz/weight.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "youngheinz/errors.hpp"

namespace yh {

namespace {

constexpr int kMaxLog2Denominator = 62;

__extension__ using Int128 = __int128;

DyadicRational reduce(std::uint64_t numerator, int log2_denominator) {
    if (numerator == 0) return {0, 0};
    while (log2_denominator > 0 && (numerator & 1u) == 0) {
        numerator >>= 1;
        --log2_denominator;
    }
    return {numerator, log2_denominator};
}

std::string describe(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

Weight::Weight(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0)
        fail(ErrorCode::domain, "weight must be finite and nonnegative, got " + describe(value));
}

Weight Weight::dyadic(std::uint64_t numerator, int log2_denominator) {
    if (log2_denominator < 0 || log2_denominator > kMaxLog2Denominator)
        fail(ErrorCode::range, "dyadic denominator exponent out of range");
    const DyadicRational r = reduce(numerator, log2_denominator);
    if (r.numerator >= (std::uint64_t{1} << 53))
        fail(ErrorCode::range, "dyadic numerator is not exactly representable");
    Weight w;
    w.value_ = std::ldexp(static_cast<double>(r.numerator), -r.log2_denominator);
    w.exact_ = r;
    return w;
}

Weight Weight::affine(std::int64_t offset, std::int64_t slope) const {
    if (exact_) {
        const int m = exact_->log2_denominator;
        // offset * 2^m + slope * p, in 128-bit to stay clear of overflow
        const Int128 p = static_cast<Int128>(exact_->numerator);
        const Int128 num = (static_cast<Int128>(offset) << m) + static_cast<Int128>(slope) * p;
        if (num < 0)
            fail(ErrorCode::domain, "weight map produced a negative weight");
        if (num >= (static_cast<Int128>(1) << 53))
            fail(ErrorCode::range, "weight map left exact dyadic range");
        return dyadic(static_cast<std::uint64_t>(num), m);
    }
    double v = static_cast<double>(offset) + static_cast<double>(slope) * value_;
    if (v < 0.0) {
        // 1 - 2*(1/2 + ulp) style roundoff
        if (v > -4.0 * std::numeric_limits<double>::epsilon()) v = 0.0;
        else fail(ErrorCode::domain, "weight map produced a negative weight " + describe(v));
    }
    return Weight(v);
}

ScaledWeight Weight::scaled(int j) const {
    if (j < 0 || j > 61) fail(ErrorCode::range, "weight scaling exponent out of range");
    if (exact_) {
        const std::uint64_t p = exact_->numerator;
        const int m = exact_->log2_denominator;
        if (j >= m) {
            const int shift = j - m;
            if (shift > 0 && p > (std::numeric_limits<std::uint64_t>::max() >> (shift + 1)))
                fail(ErrorCode::range, "2^j * nu overflows");
            return {static_cast<std::int64_t>(p << shift), 0.0};
        }
        const int shift = m - j;
        const std::uint64_t whole = p >> shift;
        const std::uint64_t rest = p & ((std::uint64_t{1} << shift) - 1);
        return {static_cast<std::int64_t>(whole), std::ldexp(static_cast<double>(rest), -shift)};
    }
    const double t = std::ldexp(value_, j);
    if (t >= 9.0e18) fail(ErrorCode::range, "2^j * nu overflows");
    const double nearest = std::nearbyint(t);
    if (std::fabs(t - nearest) <= kDyadicSnap)
        return {static_cast<std::int64_t>(nearest), 0.0};
    const double whole = std::floor(t);
    return {static_cast<std::int64_t>(whole), t - whole};
}

void Weight::require_unit_interval(const char* what) const {
    require_within(0.0, 1.0, what);
}

void Weight::require_within(double lo, double hi, const char* what) const {
    if (value_ < lo || value_ > hi) {
        std::ostringstream os;
        os << what << ": weight " << describe(value_) << " outside [" << lo << ", " << hi << "]";
        fail(ErrorCode::domain, os.str());
    }
}

}  // namespace yh
