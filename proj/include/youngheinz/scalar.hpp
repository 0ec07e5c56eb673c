#pragma once

#include <cstdint>
#include <vector>

#include "youngheinz/weight.hpp"

namespace yh {

/// Two strictly positive reals.
class ScalarPair {
public:
    ScalarPair(double a, double b);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    ScalarPair swapped() const { return {b_, a_}; }

private:
    double a_;
    double b_;
};

/// Number of refinement levels, 0..60. Zero means the empty sum.
class RefinementDepth {
public:
    static constexpr int kMax = 60;

    explicit RefinementDepth(int n);
    int n() const noexcept { return n_; }

private:
    int n_;
};

struct RefinementLevel {
    int j = 0;
    std::int64_t k = 0;   // floor(2^(j-1) nu)
    std::int64_t r = 0;   // floor(2^j nu)
    double s = 0.0;       // level weight in [0, 1/2]
    double term = 0.0;    // squared root difference
    double weighted() const { return s * term; }
};

struct RefinementBreakdown {
    std::vector<RefinementLevel> levels;
    double total() const;
};

/// Which of the closed intervals a branched inequality was evaluated on.
enum class Branch {
    none,
    lower,   // nu <= 1/2
    upper,   // nu >= 1/2
    first,   // nu in [0, 1/4]
    second,  // nu in [1/4, 1/2]
    third,   // nu in [1/2, 3/4]
    fourth,  // nu in [3/4, 1]
};

const char* to_string(Branch b) noexcept;

struct Comparison {
    double lhs = 0.0;
    double rhs = 0.0;
    Branch branch = Branch::none;
};

/// Every branch whose closed interval contains nu, in interval order.
using BranchedComparison = std::vector<Comparison>;

/// Anchors of the depth-N dyadic interpolation of a^nu b^(1-nu).
struct DyadicAnchor {
    double alpha = 1.0;  // floor(2^N nu) + 1 - 2^N nu
    double beta = 0.0;   // min(alpha, 1 - alpha)
    double x = 0.0;      // a^(r/2^N) b^(1 - r/2^N)
    double y = 0.0;      // a^((r+1)/2^N) b^(1 - (r+1)/2^N)
};

struct DoubleRefinement {
    Comparison comparison;
    DyadicAnchor anchor;
};

struct HeinzBounds {
    double lower = 0.0;
    double mid = 0.0;
    double upper = 0.0;
};

/// Refining terms of the classical one and two term refinements.
struct BaselineTerms {
    double r = 0.0;                    // min(nu, 1 - nu)
    double r0 = 0.0;                   // min(2r, 1 - 2r)
    double squared = 0.0;              // r^2 (a - b)^2
    double kittaneh = 0.0;             // r (sqrt a - sqrt b)^2
    double zhao = 0.0;                 // both two-term refining terms summed
    double zhao_reverse = 0.0;         // r0 (4th root ab - sqrt a)^2 resp. sqrt b
    double zhao_reverse_square = 0.0;  // r0 (sqrt ab - a)^2 resp. b
};

// Level quantities -----------------------------------------------------------

std::int64_t k_index(int j, const Weight& nu);
std::int64_t r_index(int j, const Weight& nu);
double s_coefficient(int j, const Weight& nu);

/// a^pa * b^pb with a range error instead of inf/0 underflow surprises.
double mixed_power(double a, double pa, double b, double pb);

// Core sums -------------------------------------------------------------------

RefinementBreakdown refinement_breakdown(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
double s_n(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
double r_n(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
DyadicAnchor dyadic_anchor(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
/// alpha_N(nu), exact for dyadic weights.
Weight dyadic_alpha(const Weight& nu, RefinementDepth depth);
/// beta_N(nu) = min(alpha_N, 1 - alpha_N).
double dyadic_beta(const Weight& nu, RefinementDepth depth);

// Young type refinements ------------------------------------------------------

Comparison young_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
BranchedComparison reverse_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);

Comparison minus_reverse_inductive(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
/// (1 + 2^N nu) a - 2^N nu (a^(2^N - 1) b)^(1/2^N), evaluated without cancellation.
double minus_reverse_closed_form(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
Comparison minus_reverse_via_s(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
Comparison minus_reverse_via_s2(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);

Comparison squared_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
/// (nu a^2 + (1-nu) b^2) + s1^2 (a-b)^2 - s1 (a-b)^2 - (nu a + (1-nu) b)^2; zero in exact arithmetic.
double squared_identity_residual(const Weight& nu, const ScalarPair& pair);
BranchedComparison squared_reverse(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);

DoubleRefinement double_refinement(const Weight& nu, const ScalarPair& pair, RefinementDepth n, RefinementDepth m);
DoubleRefinement double_squared(const Weight& nu, const ScalarPair& pair, RefinementDepth n, RefinementDepth m);
BranchedComparison double_reverse(const Weight& nu, const ScalarPair& pair, RefinementDepth n, RefinementDepth m);

// Kantorovich strengthenings ---------------------------------------------------

/// (t + 1)^2 / (4t).
double kantorovich(double t);
Comparison kanto_young_refined(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
BranchedComparison kanto_square_sab(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
BranchedComparison kanto_nu_square(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);

// Heinz means -------------------------------------------------------------------

HeinzBounds heinz_scalar_bounds(const Weight& nu, const ScalarPair& pair);
BranchedComparison heinz_refined_scalar(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);
BranchedComparison heinz_reverse_scalar(const Weight& nu, const ScalarPair& pair, RefinementDepth depth);

// Baselines -------------------------------------------------------------------------

BaselineTerms baseline_terms(const Weight& nu, const ScalarPair& pair);

}  // namespace yh
