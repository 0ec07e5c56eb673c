// yh: command-line front end for the youngheinz verification registry.
//
//   yh verify --suite 'op.*' --trials 100 --seed 1 --out report.json
//   yh verify --replay report.json
//   yh gap --entry scalar.young.refined --a 2 --b 5 --nu-grid 0:1:1/64 --nmax 10
//   yh list
//
// Exit codes: 0 all pass, 1 an inequality was violated, 2 usage or domain error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "youngheinz.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct TextDeleter {
    void operator()(yh_text* t) const { yh_text_free(t); }
};
using Text = std::unique_ptr<yh_text, TextDeleter>;

// Thrown on a failed library call; carries the exit code.
struct Failure {
    int exit_code;
    std::string message;
};

void check(yh_status status) {
    if (status != YH_OK) throw Failure{kExitUsage, std::string(yh_status_name(status)) + ": " + yh_last_error()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to path, or to stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << data)) throw Failure{kExitUsage, "cannot write " + path};
}

// Accepts decimals and p/q fractions.
double parse_number(const std::string& s) {
    const auto slash = s.find('/');
    std::size_t used = 0;
    try {
        if (slash == std::string::npos) {
            const double v = std::stod(s, &used);
            if (used == s.size()) return v;
        } else {
            const double p = std::stod(s.substr(0, slash), &used);
            if (used == slash) {
                const std::string q_text = s.substr(slash + 1);
                const double q = std::stod(q_text, &used);
                if (used == q_text.size() && q != 0.0) return p / q;
            }
        }
    } catch (const std::exception&) {
    }
    throw Failure{kExitUsage, "not a number: '" + s + "'"};
}

struct NuGrid {
    double lo = 0.0;
    double hi = 1.0;
    double step = 1.0 / 64.0;
};

NuGrid parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw Failure{kExitUsage, "--nu-grid expects lo:hi:step"};
    return {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2])};
}

void print_summary(const nlohmann::json& report) {
    for (const auto& e : report.at("entries")) {
        std::string worst = "-";
        if (e.contains("worst_margin") && !e.at("worst_margin").is_null()) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%+.3e", e.at("worst_margin").get<double>());
            worst = buf;
        }
        std::string status = e.at("pass").get<bool>() ? "PASS" : "FAIL";
        if (e.value("diagnostic", false)) {
            status = "DIAG";
            if (e.contains("max_defect") && !e.at("max_defect").is_null()) {
                char buf[48];
                std::snprintf(buf, sizeof buf, "defect %.3e", e.at("max_defect").get<double>());
                worst = buf;
            }
        }
        std::fprintf(stderr, "%s %-28s %llu/%llu  worst %s", status.c_str(), e.at("id").get<std::string>().c_str(),
                     e.at("pass_count").get<unsigned long long>(), e.at("trials").get<unsigned long long>(),
                     worst.c_str());
        if (e.contains("error")) std::fprintf(stderr, "  (%s)", e.at("error").get<std::string>().c_str());
        std::fputc('\n', stderr);
    }
}

struct VerifyArgs {
    std::string suite = "all";
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::vector<std::size_t> dims{2, 3, 4, 8};
    int nmax = 6;
    double tol = 1e-10;
    std::string out;
    std::string replay;
    bool timing = false;
    bool quiet = false;
};

int run_verify(const VerifyArgs& args) {
    int passed = 0;
    Text text;
    if (!args.replay.empty()) {
        yh_text* raw = nullptr;
        check(yh_replay(read_file(args.replay).c_str(), args.tol, &raw, &passed));
        text.reset(raw);
        const auto results = nlohmann::json::parse(yh_text_data(text.get()));
        if (!args.quiet)
            for (const auto& r : results) {
                const bool ok = r.at("pass").get<bool>();
                std::fprintf(stderr, "%s %-28s margin %s\n", ok ? "PASS" : "FAIL", r.at("id").get<std::string>().c_str(),
                             r.at("margin").is_null() ? "-" : std::to_string(r.at("margin").get<double>()).c_str());
            }
    } else {
        yh_suite_options o;
        yh_suite_options_init(&o);
        o.suite = args.suite.c_str();
        o.trials = args.trials;
        o.seed = args.seed;
        o.dims = args.dims.data();
        o.dim_count = args.dims.size();
        o.depth_max = args.nmax;
        o.tol_rel = args.tol;
        o.timing = args.timing ? 1 : 0;
        yh_text* raw = nullptr;
        check(yh_run_suite(&o, &raw, &passed));
        text.reset(raw);
        if (!args.quiet) print_summary(nlohmann::json::parse(yh_text_data(text.get())));
    }
    write_output(args.out, std::string(yh_text_data(text.get()), yh_text_size(text.get())));
    return passed ? kExitPass : kExitViolation;
}

struct GapArgs {
    std::string entry = "scalar.young.refined";
    double a = 2.0;
    double b = 5.0;
    std::string grid = "0:1:1/64";
    int nmax = 10;
    std::string format = "csv";
    std::string out;
};

int run_gap(const GapArgs& args) {
    const NuGrid g = parse_grid(args.grid);
    yh_text* raw = nullptr;
    check(yh_gap_report(args.entry.c_str(), args.a, args.b, g.lo, g.hi, g.step, args.nmax,
                        args.format == "json" ? YH_GAP_JSON : YH_GAP_CSV, &raw));
    const Text text(raw);
    write_output(args.out, std::string(yh_text_data(text.get()), yh_text_size(text.get())));
    return kExitPass;
}

int run_list(bool json, bool manifest) {
    yh_text* raw = nullptr;
    check(manifest ? yh_manifest(&raw) : yh_registry_list(&raw));
    const Text text(raw);
    if (json) {
        std::cout << yh_text_data(text.get());
        return kExitPass;
    }
    const auto rows = nlohmann::json::parse(yh_text_data(text.get()));
    for (const auto& r : rows) {
        if (manifest) {
            std::string ids;
            for (const auto& id : r.at("entries")) ids += (ids.empty() ? "" : ", ") + id.get<std::string>();
            std::printf("%-52s %s\n", r.at("result").get<std::string>().c_str(), ids.c_str());
        } else {
            std::printf("%-28s %s\n", r.at("id").get<std::string>().c_str(),
                        r.at("paper_location").get<std::string>().c_str());
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify multi-term refinements of Young's inequality and their matrix versions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(yh_version()));

    VerifyArgs verify;
    auto* cmd_verify = app.add_subcommand("verify", "Run randomized verification suites");
    cmd_verify->add_option("--suite", verify.suite, "Entry id or glob, or 'all'")->capture_default_str();
    cmd_verify->add_option("--trials", verify.trials, "Trials per entry")->capture_default_str()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", verify.seed, "Base seed")->capture_default_str();
    cmd_verify->add_option("--dims", verify.dims, "Matrix dimensions, cycled over trials")
        ->delimiter(',')
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd_verify->add_option("--nmax", verify.nmax, "Largest refinement depth")->capture_default_str()->check(CLI::Range(0, 60));
    cmd_verify->add_option("--tol", verify.tol, "Relative tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
    cmd_verify->add_option("--out", verify.out, "Report path (stdout when omitted)");
    cmd_verify->add_option("--replay", verify.replay, "Re-evaluate an instance or every worst instance of a report")
        ->check(CLI::ExistingFile);
    cmd_verify->add_flag("--timing", verify.timing, "Record wall time in the report");
    cmd_verify->add_flag("-q,--quiet", verify.quiet, "No per-entry summary on stderr");

    GapArgs gap;
    auto* cmd_gap = app.add_subcommand("gap", "Tabulate rhs - lhs against refinement depth");
    cmd_gap->add_option("--entry", gap.entry, "Scalar entry id")->capture_default_str();
    cmd_gap->add_option("--a", gap.a)->capture_default_str();
    cmd_gap->add_option("--b", gap.b)->capture_default_str();
    cmd_gap->add_option("--nu-grid", gap.grid, "lo:hi:step, fractions allowed")->capture_default_str();
    cmd_gap->add_option("--nmax", gap.nmax)->capture_default_str()->check(CLI::Range(0, 60));
    cmd_gap->add_option("--format", gap.format)->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    cmd_gap->add_option("--out", gap.out, "Output path (stdout when omitted)");

    bool list_json = false;
    bool list_manifest = false;
    auto* cmd_list = app.add_subcommand("list", "Print registry ids with the result each one checks");
    cmd_list->add_flag("--json", list_json);
    cmd_list->add_flag("--manifest", list_manifest, "Print the result-to-entry coverage manifest instead");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*cmd_verify) return run_verify(verify);
        if (*cmd_gap) return run_gap(gap);
        if (*cmd_list) return run_list(list_json, list_manifest);
    } catch (const Failure& f) {
        std::fprintf(stderr, "yh: %s\n", f.message.c_str());
        return f.exit_code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "yh: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
