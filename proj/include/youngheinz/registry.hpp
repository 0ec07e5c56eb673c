#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "youngheinz/random.hpp"
#include "youngheinz/scalar.hpp"

namespace yh {

using Json = nlohmann::ordered_json;

enum class EntryKind { scalar, loewner, hilbert_schmidt, log_convex };

const char* to_string(EntryKind kind) noexcept;

/// Parameter space an entry samples from.
struct EntryDomain {
    double nu_lo = 0.0;
    double nu_hi = 1.0;
    int depth_min = 0;
    int depth_cap = RefinementDepth::kMax;
};

struct SampleContext {
    std::uint64_t trial = 0;
    std::vector<std::size_t> dims;
    int depth_max = 6;
};

struct Check {
    std::string label;
    double margin = 0.0;  // >= -tol passes
};

struct Outcome {
    std::vector<Check> checks;
    std::optional<double> defect;  // diagnostic entries only

    double margin() const;
};

using ScalarCompare = std::function<BranchedComparison(const Weight&, const ScalarPair&, RefinementDepth)>;

struct Entry {
    std::string id;
    std::string location;  // which result this entry checks
    EntryKind kind = EntryKind::scalar;
    EntryDomain domain;
    bool diagnostic = false;  // reports a measurement, never fails
    std::function<Json(Rng&, const SampleContext&)> sample;
    std::function<Outcome(const Json&)> evaluate;
    ScalarCompare compare;  // set for scalar entries usable in gap tables
};

const std::vector<Entry>& registry();
/// Unknown-entry error if absent.
const Entry& find_entry(std::string_view id);
/// "all", an exact id, or a glob with * and ?. Unknown-entry error when nothing matches.
std::vector<const Entry*> select_entries(std::string_view pattern);

/// Each verified result, mapped to the entries that check it.
struct ManifestRow {
    std::string result;
    std::vector<std::string> entries;
};

const std::vector<ManifestRow>& manifest();

// Margins -------------------------------------------------------------------------------

/// (rhs - lhs) / max(1, |lhs|, |rhs|)
double inequality_margin(double lhs, double rhs);
/// -|x - y| / max(1, |x|, |y|)
double identity_margin(double x, double y);
/// Check label for a branch; "inequality" for single-branch results.
const char* branch_label(Branch b) noexcept;

// Instance encoding ------------------------------------------------------------------

Json encode_weight(const Weight& w);
Weight decode_weight(const Json& instance, const char* key = "nu");
Json encode_matrix(const Matrix& m);
Matrix decode_matrix(const Json& j);

// Suites ------------------------------------------------------------------------------

struct SuiteOptions {
    std::string suite = "all";
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{2, 3, 4, 8};
    int depth_max = 6;
    double tol_rel = 1e-10;
    bool timing = false;
};

struct EntryReport {
    std::string id;
    std::string location;
    bool diagnostic = false;
    bool pass = true;
    std::uint64_t pass_count = 0;
    std::uint64_t trials = 0;
    std::optional<double> worst_margin;
    Json worst_instance;
    std::optional<double> max_defect;
    std::optional<std::string> error;
};

struct VerificationReport {
    int version = 1;
    std::string suite;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    double tol_rel = 0.0;
    std::vector<EntryReport> entries;
    std::optional<double> wall_ms;

    bool passed() const;
};

VerificationReport run_suite(const SuiteOptions& options);

Json to_json(const VerificationReport& report);
/// Usage error on a malformed document.
VerificationReport report_from_json(const Json& doc);

struct ReplayResult {
    std::string id;
    Outcome outcome;
    bool pass = false;
};

/// Re-evaluates a single instance ({"entry": ...}) or every worst instance of a report.
std::vector<ReplayResult> replay(const Json& doc, double tol_rel);

// Gap tables ----------------------------------------------------------------------------

struct GapOptions {
    std::string entry = "scalar.young.refined";
    double a = 2.0;
    double b = 5.0;
    double nu_lo = 0.0;
    double nu_hi = 1.0;
    double nu_step = 1.0 / 64.0;
    int depth_max = 10;
};

struct GapRow {
    double nu = 0.0;
    int depth = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double gap = 0.0;
    double baseline_squared = 0.0;   // one-term squared refinement
    double baseline_kittaneh = 0.0;  // one-term square-root refinement
    double baseline_zhao = 0.0;      // two-term refinement
};

std::vector<GapRow> gap_table(const GapOptions& options);
std::string gap_csv(const std::vector<GapRow>& rows);
Json gap_json(const GapOptions& options, const std::vector<GapRow>& rows);

// Registration hooks used by the entry tables.
void add_scalar_entries(std::vector<Entry>& out);
void add_matrix_entries(std::vector<Entry>& out);

/// nu drawn with boundary probes first, then a dyadic probe every tenth trial.
Weight sample_weight(Rng& rng, const SampleContext& ctx, const EntryDomain& domain);
int sample_depth(Rng& rng, const SampleContext& ctx, const EntryDomain& domain);

}  // namespace yh
