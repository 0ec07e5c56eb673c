#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "youngheinz/errors.hpp"
#include "youngheinz/registry.hpp"

using namespace yh;

namespace {

void expect_code(ErrorCode code, const std::function<void()>& body) {
    try {
        body();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

SuiteOptions small_suite(const std::string& pattern, std::uint64_t trials = 20) {
    SuiteOptions o;
    o.suite = pattern;
    o.trials = trials;
    o.seed = 7;
    o.dims = {2, 3};
    o.depth_max = 4;
    return o;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndDocumented) {
    std::set<std::string> ids;
    for (const Entry& e : registry()) {
        EXPECT_TRUE(ids.insert(e.id).second) << e.id;
        EXPECT_FALSE(e.location.empty()) << e.id;
        EXPECT_TRUE(e.sample && e.evaluate) << e.id;
    }
    EXPECT_GE(ids.size(), 30u);
}

TEST(Registry, ManifestCoversEveryEntry) {
    std::set<std::string> covered;
    for (const ManifestRow& row : manifest()) {
        EXPECT_FALSE(row.entries.empty()) << row.result;
        for (const std::string& id : row.entries) {
            EXPECT_NO_THROW(find_entry(id)) << row.result;
            covered.insert(id);
        }
    }
    for (const Entry& e : registry()) EXPECT_TRUE(covered.count(e.id)) << e.id << " is in no manifest row";
}

TEST(Registry, SelectionAndUnknownIds) {
    EXPECT_EQ(select_entries("all").size(), registry().size());
    EXPECT_EQ(select_entries("scalar.young.refined").size(), 1u);
    for (const Entry* e : select_entries("op.*")) EXPECT_EQ(e->id.rfind("op.", 0), 0u);
    expect_code(ErrorCode::unknown_entry, [] { find_entry("scalar.nope"); });
    expect_code(ErrorCode::unknown_entry, [] { select_entries("zz.*"); });
}

TEST(Registry, MarginConventions) {
    EXPECT_DOUBLE_EQ(inequality_margin(1.0, 3.0), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(inequality_margin(0.1, 0.2), 0.1);
    EXPECT_DOUBLE_EQ(identity_margin(2.0, 2.0), 0.0);
    EXPECT_DOUBLE_EQ(identity_margin(4.0, 2.0), -0.5);
}

TEST(Suite, SameSeedGivesIdenticalReports) {
    const SuiteOptions o = small_suite("all", 5);
    EXPECT_EQ(to_json(run_suite(o)).dump(), to_json(run_suite(o)).dump());
    SuiteOptions other = o;
    other.seed = 8;
    EXPECT_NE(to_json(run_suite(o)).dump(), to_json(run_suite(other)).dump());
}

TEST(Suite, ReportRoundTripsThroughJson) {
    const Json first = to_json(run_suite(small_suite("scalar.*", 10)));
    EXPECT_EQ(to_json(report_from_json(first)).dump(), first.dump());
    expect_code(ErrorCode::usage, [] { report_from_json(Json::parse(R"({"version": 1})")); });
}

TEST(Suite, TrueEntriesPass) {
    const VerificationReport r = run_suite(small_suite("all", 30));
    for (const EntryReport& e : r.entries) {
        if (e.id == "op.kanto") continue;
        EXPECT_TRUE(e.pass) << e.id << " worst " << e.worst_margin.value_or(NAN);
        EXPECT_FALSE(e.error.has_value()) << e.id;
    }
}

TEST(Suite, DiagnosticEntriesNeverFail) {
    const VerificationReport r = run_suite(small_suite("op.minus.literal", 30));
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_TRUE(r.entries[0].diagnostic);
    EXPECT_TRUE(r.entries[0].pass);
    ASSERT_TRUE(r.entries[0].max_defect.has_value());
    EXPECT_GT(*r.entries[0].max_defect, 0.0);
}

TEST(Suite, ReplayReproducesWorstInstances) {
    const VerificationReport r = run_suite(small_suite("scalar.*", 10));
    const auto results = replay(to_json(r), r.tol_rel);
    ASSERT_EQ(results.size(), r.entries.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
        EXPECT_EQ(results[i].id, r.entries[i].id);
        EXPECT_EQ(results[i].pass, r.entries[i].pass);
        EXPECT_EQ(results[i].outcome.margin(), *r.entries[i].worst_margin);
    }
}

TEST(Suite, ReplayOfSingleInstance) {
    const Json inst = {{"entry", "scalar.young.refined"}, {"nu", 0.3}, {"a", 2.0}, {"b", 5.0}, {"n", 3}};
    const auto results = replay(inst, 1e-10);
    ASSERT_EQ(results.size(), 1u);
    EXPECT_TRUE(results[0].pass);
    expect_code(ErrorCode::unknown_entry, [] { replay(Json{{"entry", "nope"}}, 1e-10); });
}

TEST(Gap, ZeroAtDyadicWeightsAndNonincreasing) {
    GapOptions o;
    o.nu_step = 1.0 / 64.0;
    o.depth_max = 8;
    const auto rows = gap_table(o);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const GapRow& r = rows[i];
        EXPECT_GE(r.gap, -1e-12 * (o.a + o.b));
        if (rows[i - 1].nu == r.nu) {
            EXPECT_LE(r.gap, rows[i - 1].gap + 1e-12 * (o.a + o.b));
        }
        if (r.depth >= 6) {
            EXPECT_LE(std::fabs(r.gap), 1e-12 * (o.a + o.b)) << "nu " << r.nu;
        }
        if (r.depth == 1) {
            EXPECT_NEAR(r.gap, r.baseline_kittaneh, 1e-12 * (o.a + o.b));
        }
    }
    const std::string csv = gap_csv(rows);
    EXPECT_EQ(csv.rfind("nu,N,lhs,rhs,gap,baseline_squared,baseline_kittaneh,baseline_zhao\n", 0), 0u);
}

TEST(Gap, RejectsBadRequests) {
    GapOptions outside;
    outside.entry = "scalar.reverse.lo";
    outside.nu_hi = 1.0;
    expect_code(ErrorCode::domain, [&] { gap_table(outside); });
    GapOptions matrix;
    matrix.entry = "op.young.refined";
    expect_code(ErrorCode::usage, [&] { gap_table(matrix); });
}
