#include "youngheinz/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "youngheinz/errors.hpp"

namespace yh {

namespace {

double sq(double x) { return x * x; }

// 2^j as a double, exact for j <= 1023.
double pow2(int j) { return std::ldexp(1.0, j); }

void require_depth_at_least(RefinementDepth depth, int min, const char* what) {
    if (depth.n() < min) {
        std::ostringstream os;
        os << what << " needs depth >= " << min << ", got " << depth.n();
        fail(ErrorCode::depth, os.str());
    }
}

double finite_or_throw(double v, const char* what) {
    if (!std::isfinite(v)) fail(ErrorCode::range, std::string(what) + " left double range");
    return v;
}

// (a^(k/2^j) b^((2^(j-1)-k)/2^j) - a^((k+1)/2^j) b^((2^(j-1)-k-1)/2^j))^2.
// The second root is the first times (a/b)^(1/2^j), so the difference is
// formed with expm1 rather than by subtraction.
double root_difference_squared(double a, double b, int j, std::int64_t k) {
    const double half = pow2(j - 1);
    const double x = mixed_power(a, std::ldexp(static_cast<double>(k), -j),
                                 b, std::ldexp(half - static_cast<double>(k), -j));
    const double step = std::expm1(std::ldexp(std::log(a) - std::log(b), -j));
    return finite_or_throw(sq(x * step), "refinement term");
}

double geometric(const Weight& nu, const ScalarPair& p) {
    return mixed_power(p.a(), nu.value(), p.b(), nu.complement().value());
}

double arithmetic(const Weight& nu, const ScalarPair& p) {
    return nu.value() * p.a() + nu.complement().value() * p.b();
}

double root_gap_squared(double a, double b) { return sq(std::sqrt(a) - std::sqrt(b)); }

// Weight alpha_N = floor(2^N nu) + 1 - 2^N nu, kept exact for dyadic nu.
Weight anchor_weight(const Weight& nu, RefinementDepth depth) {
    const ScaledWeight sc = nu.scaled(depth.n());
    if (sc.fraction == 0.0) return Weight::dyadic(1, 0);
    if (nu.exact() && depth.n() <= 52)
        return nu.affine(sc.whole + 1, -(std::int64_t{1} << depth.n()));
    return Weight(1.0 - sc.fraction);
}

// exp(beta * log K(t)) with K computed symmetrically in t and 1/t.
double kanto_factor(double t, double beta) {
    if (beta == 0.0) return 1.0;
    return std::pow(kantorovich(t), beta);
}

double anchor_beta(const Weight& nu, RefinementDepth depth) {
    const double f = nu.scaled(depth.n()).fraction;
    return std::min(f, 1.0 - f);
}

bool lower_half(const Weight& nu) { return nu.value() <= 0.5; }
bool upper_half(const Weight& nu) { return nu.value() >= 0.5; }

}  // namespace

ScalarPair::ScalarPair(double a, double b) : a_(a), b_(b) {
    if (!(std::isfinite(a) && a > 0.0) || !(std::isfinite(b) && b > 0.0)) {
        std::ostringstream os;
        os.precision(17);
        os << "scalar pair must be positive and finite, got (" << a << ", " << b << ")";
        fail(ErrorCode::domain, os.str());
    }
}

RefinementDepth::RefinementDepth(int n) : n_(n) {
    if (n < 0) fail(ErrorCode::depth, "refinement depth must be nonnegative");
    if (n > kMax) fail(ErrorCode::range, "refinement depth above 60");
}

double RefinementBreakdown::total() const {
    double s = 0.0;
    for (const auto& l : levels) s += l.weighted();
    return s;
}

const char* to_string(Branch b) noexcept {
    switch (b) {
        case Branch::none: return "none";
        case Branch::lower: return "lower";
        case Branch::upper: return "upper";
        case Branch::first: return "first";
        case Branch::second: return "second";
        case Branch::third: return "third";
        case Branch::fourth: return "fourth";
    }
    return "none";
}

std::int64_t r_index(int j, const Weight& nu) { return nu.scaled(j).whole; }

std::int64_t k_index(int j, const Weight& nu) {
    if (j < 1) fail(ErrorCode::depth, "level index starts at 1");
    // Taken from the same snapped scaling as r_j so the pair stays consistent.
    return nu.scaled(j).whole >> 1;
}

double s_coefficient(int j, const Weight& nu) {
    if (j < 1) fail(ErrorCode::depth, "level index starts at 1");
    const ScaledWeight sc = nu.scaled(j);
    return (sc.whole % 2 == 0) ? sc.fraction / 2.0 : (1.0 - sc.fraction) / 2.0;
}

double mixed_power(double a, double pa, double b, double pb) {
    double v = std::pow(a, pa) * std::pow(b, pb);
    if (!std::isfinite(v) || (v == 0.0 && a > 0.0 && b > 0.0))
        v = std::exp(pa * std::log(a) + pb * std::log(b));
    return finite_or_throw(v, "power product");
}

RefinementBreakdown refinement_breakdown(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("refinement sum");
    RefinementBreakdown out;
    out.levels.reserve(static_cast<std::size_t>(depth.n()));
    for (int j = 1; j <= depth.n(); ++j) {
        RefinementLevel level;
        level.j = j;
        level.r = r_index(j, nu);
        level.k = level.r >> 1;
        level.s = s_coefficient(j, nu);
        level.term = root_difference_squared(pair.a(), pair.b(), j, level.k);
        out.levels.push_back(level);
    }
    return out;
}

double s_n(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("refinement sum");
    double total = 0.0;
    for (int j = 1; j <= depth.n(); ++j) {
        const double s = s_coefficient(j, nu);
        if (s == 0.0) continue;
        total += s * root_difference_squared(pair.a(), pair.b(), j, k_index(j, nu));
    }
    return total;
}

Weight dyadic_alpha(const Weight& nu, RefinementDepth depth) { return anchor_weight(nu, depth); }

double dyadic_beta(const Weight& nu, RefinementDepth depth) { return anchor_beta(nu, depth); }

DyadicAnchor dyadic_anchor(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("dyadic anchor");
    const int n = depth.n();
    const ScaledWeight sc = nu.scaled(n);
    const double r = static_cast<double>(sc.whole);
    const double full = pow2(n);
    DyadicAnchor out;
    out.alpha = 1.0 - sc.fraction;
    out.beta = std::min(out.alpha, sc.fraction);
    out.x = mixed_power(pair.a(), std::ldexp(r, -n), pair.b(), std::ldexp(full - r, -n));
    out.y = mixed_power(pair.a(), std::ldexp(r + 1.0, -n), pair.b(), std::ldexp(full - r - 1.0, -n));
    return out;
}

double r_n(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    const DyadicAnchor an = dyadic_anchor(nu, pair, depth);
    if (an.alpha == 1.0) return an.x;
    return an.alpha * an.x + (1.0 - an.alpha) * an.y;
}

Comparison young_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("young_refined");
    return {geometric(nu, pair) + s_n(nu, pair, depth), arithmetic(nu, pair), Branch::none};
}

BranchedComparison reverse_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("reverse_refined");
    const double a = pair.a(), b = pair.b();
    const ScalarPair mid_a(std::sqrt(a) * std::sqrt(b), a);
    const ScalarPair mid_b(std::sqrt(a) * std::sqrt(b), b);
    const double base = arithmetic(nu, pair);
    const double geo = geometric(nu, pair);
    BranchedComparison out;
    if (lower_half(nu))
        out.push_back({base + s_n(nu.doubled(), mid_a, depth),
                       geo + nu.complement().value() * root_gap_squared(a, b), Branch::lower});
    if (upper_half(nu))
        out.push_back({base + s_n(nu.affine(2, -2), mid_b, depth),
                       geo + nu.value() * root_gap_squared(a, b), Branch::upper});
    return out;
}

Comparison minus_reverse_inductive(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double log_ratio = std::log(b) - std::log(a);
    double sum = 0.0;
    for (int j = 1; j <= depth.n(); ++j) {
        // sqrt(a) - (a^(2^(j-1)-1) b)^(1/2^j) = -sqrt(a) * expm1(log(b/a) / 2^j)
        const double diff = std::sqrt(a) * std::expm1(std::ldexp(log_ratio, -j));
        sum += pow2(j - 1) * diff * diff;
    }
    const double lhs = finite_or_throw((1.0 + v) * a - v * b + v * sum, "minus reverse sum");
    return {lhs, mixed_power(a, 1.0 + v, b, -v), Branch::none};
}

double minus_reverse_closed_form(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    const double a = pair.a();
    const double scaled_nu = std::ldexp(nu.value(), depth.n());
    const double step = std::expm1(std::ldexp(std::log(pair.b()) - std::log(a), -depth.n()));
    return finite_or_throw(a - scaled_nu * a * step, "minus reverse closed form");
}

Comparison minus_reverse_via_s(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("minus_reverse_via_s");
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const ScalarPair lifted(a * b, b * b);
    const double lhs = (1.0 + v) * a - v * b + s_n(nu.complement(), lifted, depth) / b;
    return {lhs, mixed_power(a, 1.0 + v, b, -v), Branch::none};
}

Comparison minus_reverse_via_s2(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double top = mixed_power(a, 1.0 + v, b, -v);
    const Weight t(1.0 / (1.0 + v));
    const double lhs = (1.0 + v) * a - v * b + (1.0 + v) * s_n(t, ScalarPair(top, b), depth);
    return {lhs, top, Branch::none};
}

Comparison squared_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("squared_refined");
    require_depth_at_least(depth, 2, "squared_refined");
    const double a = pair.a(), b = pair.b();
    const double s1 = s_coefficient(1, nu);
    const ScalarPair squares(a * a, b * b);
    double tail = 0.0;
    for (int j = 2; j <= depth.n(); ++j) {
        const double s = s_coefficient(j, nu);
        if (s != 0.0) tail += s * root_difference_squared(squares.a(), squares.b(), j, k_index(j, nu));
    }
    const double lhs = sq(geometric(nu, pair)) + sq(s1) * sq(a - b) + tail;
    return {lhs, sq(arithmetic(nu, pair)), Branch::none};
}

double squared_identity_residual(const Weight& nu, const ScalarPair& pair) {
    nu.require_unit_interval("squared identity");
    const double a = pair.a(), b = pair.b(), v = nu.value(), w = nu.complement().value();
    const double s1 = s_coefficient(1, nu);
    return (v * a * a + w * b * b) + s1 * s1 * sq(a - b) - s1 * sq(a - b) - sq(v * a + w * b);
}

BranchedComparison squared_reverse(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("squared_reverse");
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double base = sq(arithmetic(nu, pair));
    const double geo2 = sq(geometric(nu, pair));
    BranchedComparison out;
    if (lower_half(nu))
        out.push_back({base + s_n(nu.doubled(), ScalarPair(a * b, a * a), depth),
                       geo2 + sq(nu.complement().value()) * sq(a - b), Branch::lower});
    if (upper_half(nu))
        out.push_back({base + s_n(nu.affine(2, -2), ScalarPair(a * b, b * b), depth),
                       geo2 + v * v * sq(a - b), Branch::upper});
    return out;
}

DoubleRefinement double_refinement(const Weight& nu, const ScalarPair& pair, RefinementDepth n, RefinementDepth m) {
    nu.require_unit_interval("double_refinement");
    DoubleRefinement out;
    out.anchor = dyadic_anchor(nu, pair, n);
    const double second = s_n(anchor_weight(nu, n), ScalarPair(out.anchor.x, out.anchor.y), m);
    out.comparison = {geometric(nu, pair) + s_n(nu, pair, n) + second, arithmetic(nu, pair), Branch::none};
    return out;
}

DoubleRefinement double_squared(const Weight& nu, const ScalarPair& pair, RefinementDepth n, RefinementDepth m) {
    nu.require_unit_interval("double_squared");
    require_depth_at_least(n, 1, "double_squared");
    const double a = pair.a(), b = pair.b();
    const ScalarPair squares(a * a, b * b);
    DoubleRefinement out;
    out.anchor = dyadic_anchor(nu, squares, n);
    double tail = 0.0;
    for (int j = 2; j <= n.n(); ++j) {
        const double s = s_coefficient(j, nu);
        if (s != 0.0) tail += s * root_difference_squared(squares.a(), squares.b(), j, k_index(j, nu));
    }
    const double second = s_n(anchor_weight(nu, n), ScalarPair(out.anchor.x, out.anchor.y), m);
    const double s1 = s_coefficient(1, nu);
    const double lhs = sq(geometric(nu, pair)) + sq(s1) * sq(a - b) + second + tail;
    out.comparison = {lhs, sq(arithmetic(nu, pair)), Branch::none};
    return out;
}

BranchedComparison double_reverse(const Weight& nu, const ScalarPair& pair, RefinementDepth n, RefinementDepth m) {
    nu.require_unit_interval("double_reverse");
    const double a = pair.a(), b = pair.b();
    const double root = std::sqrt(a) * std::sqrt(b);
    const double base = arithmetic(nu, pair);
    const double geo = geometric(nu, pair);
    auto refine = [&](const Weight& w, const ScalarPair& inner) {
        const DyadicAnchor an = dyadic_anchor(w, inner, n);
        return s_n(w, inner, n) + s_n(anchor_weight(w, n), ScalarPair(an.x, an.y), m);
    };
    BranchedComparison out;
    if (lower_half(nu))
        out.push_back({base + refine(nu.doubled(), ScalarPair(root, a)),
                       geo + nu.complement().value() * root_gap_squared(a, b), Branch::lower});
    if (upper_half(nu))
        out.push_back({base + refine(nu.affine(2, -2), ScalarPair(root, b)),
                       geo + nu.value() * root_gap_squared(a, b), Branch::upper});
    return out;
}

double kantorovich(double t) {
    if (!(std::isfinite(t) && t > 0.0)) fail(ErrorCode::domain, "Kantorovich constant needs t > 0");
    return (t + 2.0 + 1.0 / t) / 4.0;
}

Comparison kanto_young_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("kanto_young_refined");
    const double ratio = std::pow(pair.b() / pair.a(), std::ldexp(1.0, -depth.n()));
    const double lhs = kanto_factor(ratio, anchor_beta(nu, depth)) * geometric(nu, pair) + s_n(nu, pair, depth);
    return {lhs, arithmetic(nu, pair), Branch::none};
}

BranchedComparison kanto_square_sab(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("kanto_square_sab");
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double root_exp = std::ldexp(1.0, -depth.n());
    const double geo2 = sq(geometric(nu, pair));
    const double rhs = sq(arithmetic(nu, pair));
    BranchedComparison out;
    if (lower_half(nu)) {
        const Weight w = nu.affine(1, -2);
        double lhs = v * v * sq(a + b);
        // (1-2nu)^(2nu) and (1-2nu) b S_N(.) both vanish at nu = 1/2
        if (w.value() > 0.0) {
            const double c = w.value();
            const double k = kanto_factor(std::pow(b / (c * a), root_exp), anchor_beta(nu.doubled(), depth));
            lhs += std::pow(c, 2.0 * v) * k * geo2 + c * b * s_n(w, ScalarPair(b / c, a), depth);
        }
        out.push_back({lhs, rhs, Branch::lower});
    }
    if (upper_half(nu)) {
        const Weight w = nu.affine(-1, 2);
        double lhs = sq(1.0 - v) * sq(a + b);
        if (w.value() > 0.0) {
            const double c = w.value();
            const double k = kanto_factor(std::pow(c * b / a, root_exp), anchor_beta(w, depth));
            lhs += std::pow(c, 2.0 - 2.0 * v) * k * geo2 + c * a * s_n(w, ScalarPair(a / c, b), depth);
        }
        out.push_back({lhs, rhs, Branch::upper});
    }
    return out;
}

BranchedComparison kanto_nu_square(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("kanto_nu_square");
    const double a = pair.a(), b = pair.b(), v = nu.value(), w = nu.complement().value();
    const double root_exp = std::ldexp(1.0, -depth.n());
    const double geo = geometric(nu, pair);
    const double root = std::sqrt(a) * std::sqrt(b);
    const double rhs = v * v * a + w * w * b;
    BranchedComparison out;
    if (lower_half(nu)) {
        // nu = 0: the Kantorovich argument degenerates, the limit of the left side is b
        double lhs = b;
        if (v > 0.0) {
            const double k = kanto_factor(std::pow(v * std::sqrt(a / b), root_exp),
                                          anchor_beta(nu.affine(1, -2), depth));
            lhs = std::pow(v, 2.0 * v) * k * geo + v * v * root_gap_squared(a, b) +
                  s_n(nu.affine(1, -2), ScalarPair(b, v * root), depth);
        }
        out.push_back({lhs, rhs, Branch::lower});
    }
    if (upper_half(nu)) {
        double lhs = a;
        if (w > 0.0) {
            const double k = kanto_factor(std::pow(w * std::sqrt(b / a), root_exp),
                                          anchor_beta(nu.affine(-1, 2), depth));
            lhs = std::pow(w, 2.0 - 2.0 * v) * k * geo + w * w * root_gap_squared(a, b) +
                  s_n(nu.affine(-1, 2), ScalarPair(a, w * root), depth);
        }
        out.push_back({lhs, rhs, Branch::upper});
    }
    return out;
}

HeinzBounds heinz_scalar_bounds(const Weight& nu, const ScalarPair& pair) {
    nu.require_unit_interval("heinz bounds");
    const double a = pair.a(), b = pair.b();
    return {2.0 * std::sqrt(a) * std::sqrt(b), geometric(nu, pair) + geometric(nu, pair.swapped()), a + b};
}

BranchedComparison heinz_refined_scalar(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("heinz_refined_scalar");
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double heinz2 = sq(heinz_scalar_bounds(nu, pair).mid);
    const ScalarPair to_a(a * b, a * a), to_b(a * b, b * b);
    const double rhs = sq(a + b);
    BranchedComparison out;
    if (lower_half(nu)) {
        const Weight w = nu.doubled();
        out.push_back({heinz2 + 2.0 * v * sq(a - b) + s_n(w, to_a, depth) + s_n(w, to_b, depth), rhs, Branch::lower});
    }
    if (upper_half(nu)) {
        const Weight w = nu.affine(2, -2);
        out.push_back({heinz2 + 2.0 * (1.0 - v) * sq(a - b) + s_n(w, to_a, depth) + s_n(w, to_b, depth), rhs,
                       Branch::upper});
    }
    return out;
}

BranchedComparison heinz_reverse_scalar(const Weight& nu, const ScalarPair& pair, RefinementDepth depth) {
    nu.require_unit_interval("heinz_reverse_scalar");
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double root = std::sqrt(a) * std::sqrt(b);
    const double heinz2 = sq(heinz_scalar_bounds(nu, pair).mid);
    const double gap2 = sq(a - b);
    const double corners = sq(root - a) + sq(root - b);
    const double base = sq(a + b);
    // a * sqrt(ab) = sqrt(a^3 b), b * sqrt(ab) = sqrt(a b^3)
    const ScalarPair hi_mid(a * root, a * b), lo_mid(b * root, a * b);
    const ScalarPair hi_sq(a * root, a * a), lo_sq(b * root, b * b);
    auto pair_sum = [&](const Weight& w, const ScalarPair& p, const ScalarPair& q) {
        return s_n(w, p, depth) + s_n(w, q, depth);
    };
    BranchedComparison out;
    if (v <= 0.25)
        out.push_back({base + pair_sum(nu.affine(0, 4), hi_mid, lo_mid),
                       heinz2 + 2.0 * v * gap2 + (1.0 - 2.0 * v) * corners, Branch::first});
    if (v >= 0.25 && v <= 0.5)
        out.push_back({base + pair_sum(nu.affine(2, -4), hi_sq, lo_sq),
                       heinz2 + 2.0 * v * gap2 + 2.0 * v * corners, Branch::second});
    if (v >= 0.5 && v <= 0.75)
        out.push_back({base + pair_sum(nu.affine(-2, 4), hi_sq, lo_sq),
                       heinz2 + 2.0 * (1.0 - v) * gap2 + (2.0 - 2.0 * v) * corners, Branch::third});
    if (v >= 0.75)
        out.push_back({base + pair_sum(nu.affine(4, -4), hi_mid, lo_mid),
                       heinz2 + 2.0 * (1.0 - v) * gap2 + (2.0 * v - 1.0) * corners, Branch::fourth});
    return out;
}

BaselineTerms baseline_terms(const Weight& nu, const ScalarPair& pair) {
    nu.require_unit_interval("baseline terms");
    const double a = pair.a(), b = pair.b(), v = nu.value();
    const double fourth_root = std::sqrt(std::sqrt(a) * std::sqrt(b));
    const double root = std::sqrt(a) * std::sqrt(b);
    BaselineTerms t;
    t.r = std::min(v, 1.0 - v);
    t.r0 = std::min(2.0 * t.r, 1.0 - 2.0 * t.r);
    t.squared = sq(t.r) * sq(a - b);
    t.kittaneh = t.r * root_gap_squared(a, b);
    if (v <= 0.5) {
        t.zhao = v * root_gap_squared(a, b) + t.r0 * sq(fourth_root - std::sqrt(b));
        t.zhao_reverse = t.r0 * sq(fourth_root - std::sqrt(a));
        t.zhao_reverse_square = t.r0 * sq(root - a);
    } else {
        t.zhao = (1.0 - v) * root_gap_squared(a, b) + t.r0 * sq(fourth_root - std::sqrt(a));
        t.zhao_reverse = t.r0 * sq(fourth_root - std::sqrt(b));
        t.zhao_reverse_square = t.r0 * sq(root - b);
    }
    return t;
}

}  // namespace yh
