#include "youngheinz.h"

#include <cmath>
#include <new>
#include <string>

#include "youngheinz/errors.hpp"
#include "youngheinz/matrix.hpp"
#include "youngheinz/registry.hpp"
#include "youngheinz/scalar.hpp"

struct yh_matrix {
    yh::Matrix value;
};

struct yh_text {
    std::string value;
};

namespace {

thread_local std::string last_error;

yh_status status_of(yh::ErrorCode code) {
    // ErrorCode values mirror the C enum one to one.
    return static_cast<yh_status>(static_cast<int>(code));
}

yh_status set_error(yh_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs body, translating every exception into a status code.
template <class Body>
yh_status guarded(Body&& body) noexcept {
    try {
        body();
        last_error.clear();
        return YH_OK;
    } catch (const yh::Error& e) {
        return set_error(status_of(e.code()), e.what());
    } catch (const nlohmann::json::exception& e) {
        return set_error(YH_ERR_USAGE, std::string("malformed JSON: ") + e.what());
    } catch (const std::bad_alloc&) {
        return set_error(YH_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(YH_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(YH_ERR_INTERNAL, "unknown exception");
    }
}

void require(const void* p, const char* name) {
    if (p == nullptr) throw yh::Error(yh::ErrorCode::usage, std::string(name) + " must not be NULL");
}

yh_text* make_text(std::string s) { return new yh_text{std::move(s)}; }

yh_matrix* make_matrix(yh::Matrix m) { return new yh_matrix{std::move(m)}; }

}  // namespace

extern "C" {

const char* yh_status_name(yh_status status) {
    switch (status) {
        case YH_OK: return "ok";
        case YH_ERR_NULL_ARGUMENT: return "null_argument";
        case YH_ERR_INTERNAL: return "internal";
        default: break;
    }
    if (status >= YH_ERR_DOMAIN && status <= YH_ERR_UNKNOWN_ENTRY)
        return yh::to_string(static_cast<yh::ErrorCode>(static_cast<int>(status)));
    return "invalid_status";
}

const char* yh_last_error(void) { return last_error.c_str(); }

const char* yh_version(void) { return "0.1.0"; }

yh_status yh_s_n(double nu, double a, double b, int n, double* out) {
    if (!out) return set_error(YH_ERR_NULL_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = yh::s_n(yh::Weight(nu), yh::ScalarPair(a, b), yh::RefinementDepth(n)); });
}

yh_status yh_s_n_dyadic(uint64_t numerator, int log2_denominator, double a, double b, int n, double* out) {
    if (!out) return set_error(YH_ERR_NULL_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        *out = yh::s_n(yh::Weight::dyadic(numerator, log2_denominator), yh::ScalarPair(a, b), yh::RefinementDepth(n));
    });
}

yh_status yh_r_n(double nu, double a, double b, int n, double* out) {
    if (!out) return set_error(YH_ERR_NULL_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = yh::r_n(yh::Weight(nu), yh::ScalarPair(a, b), yh::RefinementDepth(n)); });
}

yh_status yh_young_refined(double nu, double a, double b, int n, double* lhs, double* rhs) {
    if (!lhs || !rhs) return set_error(YH_ERR_NULL_ARGUMENT, "lhs and rhs must not be NULL");
    return guarded([&] {
        const yh::Comparison c = yh::young_refined(yh::Weight(nu), yh::ScalarPair(a, b), yh::RefinementDepth(n));
        *lhs = c.lhs;
        *rhs = c.rhs;
    });
}

yh_status yh_kantorovich(double t, double* out) {
    if (!out) return set_error(YH_ERR_NULL_ARGUMENT, "out must not be NULL");
    return guarded([&] { *out = yh::kantorovich(t); });
}

yh_status yh_matrix_create(size_t dim, const double* re, const double* im, yh_matrix** out) {
    if (!re || !out) return set_error(YH_ERR_NULL_ARGUMENT, "re and out must not be NULL");
    return guarded([&] {
        if (dim == 0) yh::fail(yh::ErrorCode::shape, "dimension must be positive");
        yh::Matrix m(dim);
        for (std::size_t i = 0; i < dim * dim; ++i) {
            const double imag = im ? im[i] : 0.0;
            if (!std::isfinite(re[i]) || !std::isfinite(imag)) yh::fail(yh::ErrorCode::domain, "non-finite entry");
            m(i / dim, i % dim) = yh::Complex(re[i], imag);
        }
        *out = make_matrix(std::move(m));
    });
}

void yh_matrix_free(yh_matrix* m) { delete m; }

size_t yh_matrix_dim(const yh_matrix* m) { return m ? m->value.dim() : 0; }

yh_status yh_matrix_read(const yh_matrix* m, double* re, double* im) {
    if (!m || !re) return set_error(YH_ERR_NULL_ARGUMENT, "m and re must not be NULL");
    const auto& data = m->value.data();
    for (std::size_t i = 0; i < data.size(); ++i) {
        re[i] = data[i].real();
        if (im) im[i] = data[i].imag();
    }
    last_error.clear();
    return YH_OK;
}

yh_status yh_matrix_power(const yh_matrix* a, double p, yh_matrix** out) {
    if (!a || !out) return set_error(YH_ERR_NULL_ARGUMENT, "a and out must not be NULL");
    return guarded([&] { *out = make_matrix(yh::PsdMatrix(a->value).power(p).matrix()); });
}

yh_status yh_sharp(const yh_matrix* a, const yh_matrix* b, double nu, yh_matrix** out) {
    if (!a || !b || !out) return set_error(YH_ERR_NULL_ARGUMENT, "a, b and out must not be NULL");
    return guarded([&] {
        *out = make_matrix(yh::sharp(yh::SpdMatrix(a->value), yh::SpdMatrix(b->value), nu).matrix());
    });
}

yh_status yh_nabla(const yh_matrix* a, const yh_matrix* b, double nu, yh_matrix** out) {
    if (!a || !b || !out) return set_error(YH_ERR_NULL_ARGUMENT, "a, b and out must not be NULL");
    return guarded([&] {
        *out = make_matrix(yh::nabla(yh::HermitianMatrix(a->value), yh::HermitianMatrix(b->value), nu).matrix());
    });
}

yh_status yh_loewner_leq(const yh_matrix* lhs, const yh_matrix* rhs, double tol_rel, int* holds, double* min_eig) {
    if (!lhs || !rhs || !holds) return set_error(YH_ERR_NULL_ARGUMENT, "lhs, rhs and holds must not be NULL");
    return guarded([&] {
        const yh::LoewnerVerdict v =
            yh::loewner_leq(yh::HermitianMatrix(lhs->value), yh::HermitianMatrix(rhs->value), tol_rel);
        *holds = v.holds ? 1 : 0;
        if (min_eig) *min_eig = v.min_eig_of_difference;
    });
}

const char* yh_text_data(const yh_text* t) { return t ? t->value.c_str() : ""; }

size_t yh_text_size(const yh_text* t) { return t ? t->value.size() : 0; }

void yh_text_free(yh_text* t) { delete t; }

yh_status yh_registry_list(yh_text** out) {
    if (!out) return set_error(YH_ERR_NULL_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        yh::Json list = yh::Json::array();
        for (const yh::Entry& e : yh::registry())
            list.push_back({{"id", e.id},
                            {"paper_location", e.location},
                            {"kind", yh::to_string(e.kind)},
                            {"diagnostic", e.diagnostic}});
        *out = make_text(list.dump(2) + "\n");
    });
}

yh_status yh_manifest(yh_text** out) {
    if (!out) return set_error(YH_ERR_NULL_ARGUMENT, "out must not be NULL");
    return guarded([&] {
        yh::Json rows = yh::Json::array();
        for (const yh::ManifestRow& r : yh::manifest()) rows.push_back({{"result", r.result}, {"entries", r.entries}});
        *out = make_text(rows.dump(2) + "\n");
    });
}

void yh_suite_options_init(yh_suite_options* options) {
    if (!options) return;
    const yh::SuiteOptions defaults;
    options->suite = "all";
    options->trials = defaults.trials;
    options->seed = defaults.seed;
    options->dims = nullptr;
    options->dim_count = 0;
    options->depth_max = defaults.depth_max;
    options->tol_rel = defaults.tol_rel;
    options->timing = 0;
}

yh_status yh_run_suite(const yh_suite_options* options, yh_text** report, int* passed) {
    if (!options || !report || !passed) return set_error(YH_ERR_NULL_ARGUMENT, "arguments must not be NULL");
    return guarded([&] {
        yh::SuiteOptions o;
        if (options->suite) o.suite = options->suite;
        o.trials = options->trials;
        o.seed = options->seed;
        if (options->dims) {
            o.dims.assign(options->dims, options->dims + options->dim_count);
            for (std::size_t d : o.dims)
                if (d == 0) yh::fail(yh::ErrorCode::usage, "dimensions must be positive");
        }
        o.depth_max = options->depth_max;
        o.tol_rel = options->tol_rel;
        o.timing = options->timing != 0;
        const yh::VerificationReport r = yh::run_suite(o);
        *report = make_text(yh::to_json(r).dump(2) + "\n");
        *passed = r.passed() ? 1 : 0;
    });
}

yh_status yh_replay(const char* json, double tol_rel, yh_text** result, int* passed) {
    if (!json || !result || !passed) return set_error(YH_ERR_NULL_ARGUMENT, "arguments must not be NULL");
    return guarded([&] {
        const yh::Json doc = yh::Json::parse(json);
        yh::Json out = yh::Json::array();
        bool all = true;
        for (const yh::ReplayResult& r : yh::replay(doc, tol_rel)) {
            yh::Json checks = yh::Json::array();
            for (const yh::Check& c : r.outcome.checks) checks.push_back({{"label", c.label}, {"margin", c.margin}});
            const double margin = r.outcome.margin();
            out.push_back({{"id", r.id},
                           {"pass", r.pass},
                           {"margin", std::isfinite(margin) ? yh::Json(margin) : yh::Json(nullptr)},
                           {"checks", std::move(checks)},
                           {"defect", r.outcome.defect ? yh::Json(*r.outcome.defect) : yh::Json(nullptr)}});
            all = all && r.pass;
        }
        *result = make_text(out.dump(2) + "\n");
        *passed = all ? 1 : 0;
    });
}

yh_status yh_gap_report(const char* entry, double a, double b, double nu_lo, double nu_hi, double nu_step, int nmax,
                        yh_gap_format format, yh_text** out) {
    if (!entry || !out) return set_error(YH_ERR_NULL_ARGUMENT, "entry and out must not be NULL");
    return guarded([&] {
        yh::GapOptions o;
        o.entry = entry;
        o.a = a;
        o.b = b;
        o.nu_lo = nu_lo;
        o.nu_hi = nu_hi;
        o.nu_step = nu_step;
        o.depth_max = nmax;
        const auto rows = yh::gap_table(o);
        *out = make_text(format == YH_GAP_JSON ? yh::gap_json(o, rows).dump(2) + "\n" : yh::gap_csv(rows));
    });
}

}  // extern "C"
