#include "youngheinz/registry.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "youngheinz/errors.hpp"

namespace yh {

namespace {

constexpr double kProbes[] = {0.0, 0.25, 0.5, 0.75, 1.0};

std::vector<Entry> build_registry() {
    std::vector<Entry> out;
    add_scalar_entries(out);
    add_matrix_entries(out);
    return out;
}

// NaN margins rank below everything so they surface as the worst instance.
double ordered(double margin) {
    return std::isnan(margin) ? -std::numeric_limits<double>::infinity() : margin;
}

}  // namespace

const char* to_string(EntryKind kind) noexcept {
    switch (kind) {
        case EntryKind::scalar: return "scalar";
        case EntryKind::loewner: return "loewner";
        case EntryKind::hilbert_schmidt: return "hilbert_schmidt";
        case EntryKind::log_convex: return "log_convex";
    }
    return "scalar";
}

double Outcome::margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const Check& c : checks) m = std::min(m, ordered(c.margin));
    return m;
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = build_registry();
    return entries;
}

const Entry& find_entry(std::string_view id) {
    for (const Entry& e : registry())
        if (e.id == id) return e;
    fail(ErrorCode::unknown_entry, "unknown registry entry '" + std::string(id) + "'");
}

std::vector<const Entry*> select_entries(std::string_view pattern) {
    const std::string glob = pattern == "all" ? "*" : std::string(pattern);
    std::vector<const Entry*> out;
    for (const Entry& e : registry())
        if (fnmatch(glob.c_str(), e.id.c_str(), 0) == 0) out.push_back(&e);
    if (out.empty()) fail(ErrorCode::unknown_entry, "no registry entry matches '" + glob + "'");
    return out;
}

double inequality_margin(double lhs, double rhs) {
    return (rhs - lhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

double identity_margin(double x, double y) {
    return -std::fabs(x - y) / std::max({1.0, std::fabs(x), std::fabs(y)});
}

const char* branch_label(Branch b) noexcept { return b == Branch::none ? "inequality" : to_string(b); }

Weight sample_weight(Rng& rng, const SampleContext& ctx, const EntryDomain& domain) {
    std::vector<double> probes;
    for (double p : kProbes)
        if (p >= domain.nu_lo && p <= domain.nu_hi) probes.push_back(p);
    if (ctx.trial < probes.size())
        return Weight::dyadic(static_cast<std::uint64_t>(probes[ctx.trial] * 4.0), 2);
    if (ctx.trial % 10 == 0) {
        const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::max(1, ctx.depth_max))));
        const double scale = std::ldexp(1.0, m);
        const auto lo = static_cast<std::uint64_t>(std::ceil(domain.nu_lo * scale));
        const auto hi = static_cast<std::uint64_t>(std::floor(domain.nu_hi * scale));
        return Weight::dyadic(lo + rng.below(hi - lo + 1), m);
    }
    return Weight(std::min(domain.nu_hi, rng.uniform(domain.nu_lo, domain.nu_hi)));
}

int sample_depth(Rng& rng, const SampleContext& ctx, const EntryDomain& domain) {
    const int lo = domain.depth_min;
    const int hi = std::max(lo, std::min(ctx.depth_max, domain.depth_cap));
    return lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

bool VerificationReport::passed() const {
    return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.pass; });
}

VerificationReport run_suite(const SuiteOptions& options) {
    if (options.trials < 1) fail(ErrorCode::usage, "trials must be at least 1");
    if (options.dims.empty()) fail(ErrorCode::usage, "dims must not be empty");
    if (options.depth_max < 0 || options.depth_max > RefinementDepth::kMax)
        fail(ErrorCode::usage, "nmax must be in 0..60");
    if (!(options.tol_rel >= 0.0)) fail(ErrorCode::usage, "tolerance must be nonnegative");
    const auto selected = select_entries(options.suite);
    const auto start = std::chrono::steady_clock::now();

    VerificationReport report;
    report.suite = options.suite;
    report.seed = options.seed;
    report.trials = options.trials;
    report.tol_rel = options.tol_rel;

    for (const Entry* entry : selected) {
        EntryReport er;
        er.id = entry->id;
        er.location = entry->location;
        er.diagnostic = entry->diagnostic;
        double worst = std::numeric_limits<double>::infinity();
        for (std::uint64_t t = 0; t < options.trials; ++t) {
            Rng rng(derive_seed(options.seed, entry->id, t));
            const SampleContext ctx{t, options.dims, options.depth_max};
            Json instance = {{"entry", entry->id}};
            try {
                instance.update(entry->sample(rng, ctx));
                const Outcome outcome = entry->evaluate(instance);
                ++er.trials;
                if (entry->diagnostic) {
                    ++er.pass_count;
                    if (outcome.defect && (!er.max_defect || *outcome.defect > *er.max_defect)) {
                        er.max_defect = outcome.defect;
                        er.worst_instance = instance;
                    }
                    continue;
                }
                const double m = outcome.margin();
                if (m >= -options.tol_rel) ++er.pass_count;
                else er.pass = false;
                if (m < worst || er.worst_instance.is_null()) {
                    worst = m;
                    er.worst_instance = instance;
                }
            } catch (const Error& e) {
                ++er.trials;
                er.pass = false;
                er.error = std::string(to_string(e.code())) + ": " + e.what();
                er.worst_instance = instance;
                break;
            }
        }
        if (!entry->diagnostic && !er.worst_instance.is_null() && !er.error) er.worst_margin = worst;
        report.entries.push_back(std::move(er));
    }
    if (options.timing)
        report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<ReplayResult> replay(const Json& doc, double tol_rel) {
    std::vector<const Json*> instances;
    if (doc.is_object() && doc.contains("entries")) {
        for (const Json& e : doc.at("entries"))
            if (e.contains("worst_instance") && !e.at("worst_instance").is_null())
                instances.push_back(&e.at("worst_instance"));
    } else if (doc.is_object() && doc.contains("entry")) {
        instances.push_back(&doc);
    } else {
        fail(ErrorCode::usage, "replay input is neither an instance nor a report");
    }
    std::vector<ReplayResult> out;
    for (const Json* inst : instances) {
        if (!inst->contains("entry") || !inst->at("entry").is_string())
            fail(ErrorCode::usage, "instance lacks an entry id");
        const Entry& entry = find_entry(inst->at("entry").get<std::string>());
        ReplayResult r;
        r.id = entry.id;
        try {
            r.outcome = entry.evaluate(*inst);
        } catch (const nlohmann::json::exception& e) {
            fail(ErrorCode::usage, std::string("malformed instance: ") + e.what());
        }
        r.pass = entry.diagnostic || r.outcome.margin() >= -tol_rel;
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace yh
