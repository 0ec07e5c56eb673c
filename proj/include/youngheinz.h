#ifndef YOUNGHEINZ_H
#define YOUNGHEINZ_H

/*
 * C interface to the youngheinz library: multi-term refinements of the
 * weighted AM-GM inequality and their matrix versions, plus the randomized
 * verification registry.
 *
 * Every function returns a yh_status. On failure, yh_last_error() describes
 * the problem; the message is thread-local and valid until the next call on
 * the same thread. Output parameters are untouched on failure.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(YH_BUILDING_LIBRARY)
#define YH_API __attribute__((visibility("default")))
#else
#define YH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum yh_status {
    YH_OK = 0,
    YH_ERR_DOMAIN = 1,
    YH_ERR_RANGE = 2,
    YH_ERR_SHAPE = 3,
    YH_ERR_DEFINITENESS = 4,
    YH_ERR_ACCURACY = 5,
    YH_ERR_PRECONDITION = 6,
    YH_ERR_DEGENERATE = 7,
    YH_ERR_DEPTH = 8,
    YH_ERR_BRANCH = 9,
    YH_ERR_USAGE = 10,
    YH_ERR_UNKNOWN_ENTRY = 11,
    YH_ERR_NULL_ARGUMENT = 12,
    YH_ERR_INTERNAL = 13
} yh_status;

YH_API const char* yh_status_name(yh_status status);
YH_API const char* yh_last_error(void);
YH_API const char* yh_version(void);

/* Scalars ------------------------------------------------------------------ */

/* S_N(nu; a, b), nu >= 0, a, b > 0, 0 <= n <= 60. */
YH_API yh_status yh_s_n(double nu, double a, double b, int n, double* out);
/* Same with nu = numerator / 2^log2_denominator held exactly. */
YH_API yh_status yh_s_n_dyadic(uint64_t numerator, int log2_denominator, double a, double b, int n, double* out);
/* R_N(nu; a, b) = nu a + (1 - nu) b - S_N(nu; a, b). */
YH_API yh_status yh_r_n(double nu, double a, double b, int n, double* out);
/* a^nu b^(1-nu) + S_N <= nu a + (1-nu) b, both sides. */
YH_API yh_status yh_young_refined(double nu, double a, double b, int n, double* lhs, double* rhs);
/* K(t) = (1 + t)^2 / (4 t), t > 0. */
YH_API yh_status yh_kantorovich(double t, double* out);

/* Matrices ----------------------------------------------------------------- */

typedef struct yh_matrix yh_matrix;

/* Row-major dim x dim entries. im may be NULL for a real matrix. */
YH_API yh_status yh_matrix_create(size_t dim, const double* re, const double* im, yh_matrix** out);
YH_API void yh_matrix_free(yh_matrix* m);
YH_API size_t yh_matrix_dim(const yh_matrix* m);
/* Copies dim*dim entries into re and, when non-NULL, im. */
YH_API yh_status yh_matrix_read(const yh_matrix* m, double* re, double* im);

/* A^p for positive semidefinite A; negative p needs A definite. */
YH_API yh_status yh_matrix_power(const yh_matrix* a, double p, yh_matrix** out);
/* A #_nu B for positive definite A, B; any real nu. */
YH_API yh_status yh_sharp(const yh_matrix* a, const yh_matrix* b, double nu, yh_matrix** out);
/* (1 - nu) A + nu B for Hermitian A, B. */
YH_API yh_status yh_nabla(const yh_matrix* a, const yh_matrix* b, double nu, yh_matrix** out);
/* lhs <= rhs in the Loewner order up to tol_rel * max(1, |lhs|, |rhs|). */
YH_API yh_status yh_loewner_leq(const yh_matrix* lhs, const yh_matrix* rhs, double tol_rel, int* holds,
                                double* min_eig);

/* Owned strings ------------------------------------------------------------ */

typedef struct yh_text yh_text;

YH_API const char* yh_text_data(const yh_text* t);
YH_API size_t yh_text_size(const yh_text* t);
YH_API void yh_text_free(yh_text* t);

/* Registry ----------------------------------------------------------------- */

/* JSON array of {id, paper_location, kind, diagnostic}. */
YH_API yh_status yh_registry_list(yh_text** out);
/* JSON array of {result, entries}. */
YH_API yh_status yh_manifest(yh_text** out);

typedef struct yh_suite_options {
    const char* suite; /* "all", an id, or a glob */
    uint64_t trials;
    uint64_t seed;
    const size_t* dims; /* NULL selects 2, 3, 4, 8 */
    size_t dim_count;
    int depth_max;
    double tol_rel;
    int timing; /* nonzero records wall time, which breaks byte-identical reruns */
} yh_suite_options;

YH_API void yh_suite_options_init(yh_suite_options* options);

/* Runs the suite and writes the report as JSON. *passed is 1 when every
 * entry passed. A failing entry is not an error: the call still returns YH_OK. */
YH_API yh_status yh_run_suite(const yh_suite_options* options, yh_text** report, int* passed);

/* Re-evaluates a single instance or every worst instance of a report. The
 * result is a JSON array of {id, pass, margin, checks, defect}. */
YH_API yh_status yh_replay(const char* json, double tol_rel, yh_text** result, int* passed);

typedef enum yh_gap_format { YH_GAP_CSV = 0, YH_GAP_JSON = 1 } yh_gap_format;

/* Gap table for a scalar entry over nu = lo, lo + step, ..., hi and N up to nmax. */
YH_API yh_status yh_gap_report(const char* entry, double a, double b, double nu_lo, double nu_hi, double nu_step,
                               int nmax, yh_gap_format format, yh_text** out);

#ifdef __cplusplus
}
#endif

#endif /* YOUNGHEINZ_H */
