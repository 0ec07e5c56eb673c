#include <cmath>

#include "youngheinz/errors.hpp"
#include "youngheinz/registry.hpp"

namespace yh {

namespace {

Json optional_number(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return nullptr;
    return *v;
}

std::optional<double> read_optional(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

}  // namespace

Json encode_weight(const Weight& w) {
    if (!w.exact()) return w.value();
    return Json{{"value", w.value()}, {"dyadic", {w.exact()->numerator, w.exact()->log2_denominator}}};
}

Weight decode_weight(const Json& instance, const char* key) {
    if (!instance.contains(key)) fail(ErrorCode::usage, std::string("instance lacks '") + key + "'");
    const Json& j = instance.at(key);
    if (j.is_number()) return Weight(j.get<double>());
    if (j.is_object() && j.contains("dyadic")) {
        const Json& d = j.at("dyadic");
        if (!d.is_array() || d.size() != 2) fail(ErrorCode::usage, "dyadic weight must be [numerator, log2_denominator]");
        return Weight::dyadic(d.at(0).get<std::uint64_t>(), d.at(1).get<int>());
    }
    fail(ErrorCode::usage, std::string("malformed weight '") + key + "'");
}

Json encode_matrix(const Matrix& m) {
    Json re = Json::array(), im = Json::array();
    for (const Complex& z : m.data()) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    Json out{{"dim", m.dim()}, {"re", std::move(re)}};
    if (!m.is_real()) out["im"] = std::move(im);
    return out;
}

Matrix decode_matrix(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re")) fail(ErrorCode::usage, "malformed matrix");
    const auto n = j.at("dim").get<std::size_t>();
    const Json& re = j.at("re");
    const bool has_im = j.contains("im");
    if (n == 0 || re.size() != n * n || (has_im && j.at("im").size() != n * n))
        fail(ErrorCode::usage, "matrix entry count does not match its dimension");
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t idx = i * n + k;
            m(i, k) = Complex(re.at(idx).get<double>(), has_im ? j.at("im").at(idx).get<double>() : 0.0);
        }
    return m;
}

Json to_json(const VerificationReport& report) {
    Json entries = Json::array();
    for (const EntryReport& e : report.entries) {
        Json j;
        j["id"] = e.id;
        j["paper_location"] = e.location;
        j["pass"] = e.pass;
        j["pass_count"] = e.pass_count;
        j["trials"] = e.trials;
        j["worst_margin"] = optional_number(e.worst_margin);
        j["worst_instance"] = e.worst_instance;
        if (e.diagnostic) {
            j["diagnostic"] = true;
            j["max_defect"] = optional_number(e.max_defect);
        }
        if (e.error) j["error"] = *e.error;
        entries.push_back(std::move(j));
    }
    Json out;
    out["version"] = report.version;
    out["suite"] = report.suite;
    out["seed"] = report.seed;
    out["trials"] = report.trials;
    out["tol_rel"] = report.tol_rel;
    out["entries"] = std::move(entries);
    out["wall_ms"] = optional_number(report.wall_ms);
    return out;
}

VerificationReport report_from_json(const Json& doc) {
    try {
        VerificationReport r;
        r.version = doc.at("version").get<int>();
        r.suite = doc.at("suite").get<std::string>();
        r.seed = doc.at("seed").get<std::uint64_t>();
        r.trials = doc.at("trials").get<std::uint64_t>();
        r.tol_rel = doc.at("tol_rel").get<double>();
        r.wall_ms = read_optional(doc, "wall_ms");
        for (const Json& j : doc.at("entries")) {
            EntryReport e;
            e.id = j.at("id").get<std::string>();
            e.location = j.at("paper_location").get<std::string>();
            e.pass = j.at("pass").get<bool>();
            e.pass_count = j.at("pass_count").get<std::uint64_t>();
            e.trials = j.at("trials").get<std::uint64_t>();
            e.worst_margin = read_optional(j, "worst_margin");
            e.worst_instance = j.at("worst_instance");
            e.diagnostic = j.value("diagnostic", false);
            e.max_defect = read_optional(j, "max_defect");
            if (j.contains("error")) e.error = j.at("error").get<std::string>();
            r.entries.push_back(std::move(e));
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::usage, std::string("malformed report: ") + e.what());
    }
}

}  // namespace yh
