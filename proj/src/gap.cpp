#include <cmath>
#include <cstdio>
#include <limits>

#include "youngheinz/errors.hpp"
#include "youngheinz/registry.hpp"

namespace yh {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr int kMaxGridBits = 30;

double sq(double x) { return x * x; }

// Smallest m with both lo and step on the 2^-m grid, or -1.
int dyadic_bits(double lo, double step) {
    for (int m = 0; m <= kMaxGridBits; ++m) {
        const double scale = std::ldexp(1.0, m);
        if (std::floor(lo * scale) == lo * scale && std::floor(step * scale) == step * scale) return m;
    }
    return -1;
}

std::vector<Weight> weight_grid(const GapOptions& o) {
    if (!(o.nu_step > 0.0) || !(o.nu_lo <= o.nu_hi) || !std::isfinite(o.nu_hi))
        fail(ErrorCode::usage, "nu grid needs lo <= hi and a positive step");
    const auto count = static_cast<std::size_t>(std::floor((o.nu_hi - o.nu_lo) / o.nu_step + 1e-9)) + 1;
    const int bits = dyadic_bits(o.nu_lo, o.nu_step);
    std::vector<Weight> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double v = std::min(o.nu_hi, o.nu_lo + static_cast<double>(i) * o.nu_step);
        if (bits >= 0) out.push_back(Weight::dyadic(static_cast<std::uint64_t>(std::llround(std::ldexp(v, bits))), bits));
        else out.push_back(Weight(v));
    }
    return out;
}

std::string number(double v) {
    if (!std::isfinite(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

}  // namespace

std::vector<GapRow> gap_table(const GapOptions& options) {
    const Entry& entry = find_entry(options.entry);
    if (!entry.compare) fail(ErrorCode::usage, "entry '" + entry.id + "' has no scalar comparison for gap tables");
    if (options.depth_max < 0 || options.depth_max > RefinementDepth::kMax) fail(ErrorCode::usage, "nmax must be in 0..60");
    if (options.nu_lo < entry.domain.nu_lo || options.nu_hi > entry.domain.nu_hi)
        fail(ErrorCode::domain, "nu grid leaves the domain of '" + entry.id + "'");
    const ScalarPair pair(options.a, options.b);
    const int first = std::max(1, entry.domain.depth_min);

    std::vector<GapRow> rows;
    for (const Weight& nu : weight_grid(options)) {
        const double v = nu.value();
        const double arith = v * pair.a() + (1.0 - v) * pair.b();
        const double geo = mixed_power(pair.a(), v, pair.b(), 1.0 - v);
        const bool unit = v <= 1.0;
        const BaselineTerms t = unit ? baseline_terms(nu, pair) : BaselineTerms{};
        for (int n = first; n <= options.depth_max; ++n) {
            const BranchedComparison bc = entry.compare(nu, pair, RefinementDepth(n));
            if (bc.empty()) fail(ErrorCode::branch, "no branch of '" + entry.id + "' applies");
            GapRow row;
            row.nu = v;
            row.depth = n;
            row.lhs = bc.front().lhs;
            row.rhs = bc.front().rhs;
            row.gap = row.rhs - row.lhs;
            row.baseline_squared = unit ? sq(arith) - (sq(geo) + t.squared) : kNaN;
            row.baseline_kittaneh = unit ? arith - (geo + t.kittaneh) : kNaN;
            row.baseline_zhao = unit ? arith - (geo + t.zhao) : kNaN;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string gap_csv(const std::vector<GapRow>& rows) {
    std::string out = "nu,N,lhs,rhs,gap,baseline_squared,baseline_kittaneh,baseline_zhao\n";
    for (const GapRow& r : rows) {
        out += number(r.nu) + ',' + std::to_string(r.depth) + ',' + number(r.lhs) + ',' + number(r.rhs) + ',' +
               number(r.gap) + ',' + number(r.baseline_squared) + ',' + number(r.baseline_kittaneh) + ',' +
               number(r.baseline_zhao) + '\n';
    }
    return out;
}

Json gap_json(const GapOptions& options, const std::vector<GapRow>& rows) {
    Json table = Json::array();
    for (const GapRow& r : rows) {
        table.push_back({{"nu", r.nu},
                         {"N", r.depth},
                         {"lhs", json_number(r.lhs)},
                         {"rhs", json_number(r.rhs)},
                         {"gap", json_number(r.gap)},
                         {"baseline_squared", json_number(r.baseline_squared)},
                         {"baseline_kittaneh", json_number(r.baseline_kittaneh)},
                         {"baseline_zhao", json_number(r.baseline_zhao)}});
    }
    return Json{{"entry", options.entry},
                {"a", options.a},
                {"b", options.b},
                {"nu_grid", {options.nu_lo, options.nu_hi, options.nu_step}},
                {"nmax", options.depth_max},
                {"rows", std::move(table)}};
}

}  // namespace yh
