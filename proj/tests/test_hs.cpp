#include <gtest/gtest.h>

#include <cmath>

#include "youngheinz/errors.hpp"
#include "youngheinz/hs.hpp"
#include "youngheinz/random.hpp"

using namespace yh;

namespace {

void expect_rel(double actual, double expected, double tol) {
    EXPECT_LE(std::fabs(actual - expected), tol * std::max(1.0, std::fabs(expected)))
        << "actual " << actual << " expected " << expected;
}

hs::Instance diagonal_instance(const std::vector<double>& lambda, const std::vector<double>& mu, const Matrix& x) {
    return hs::Instance(PsdMatrix(Matrix::diagonal(lambda)), PsdMatrix(Matrix::diagonal(mu)), x);
}

// sum_ij |x_ij|^2 f(lambda_i, mu_j)
template <class F>
double weighted_sum(const std::vector<double>& lambda, const std::vector<double>& mu, const Matrix& x, F f) {
    double total = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (std::size_t j = 0; j < mu.size(); ++j) total += std::norm(x(i, j)) * f(lambda[i], mu[j]);
    return total;
}

std::vector<double> random_spectrum(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& e : v) e = rng.log_uniform(1e-1, 1e1);
    return v;
}

}  // namespace

TEST(HsFrozen, SquaredRefined) {
    const auto inst = diagonal_instance({1.0, 4.0}, {2.0, 3.0}, Matrix::from_rows({{1.0, 1.0}, {1.0, 1.0}}));
    const hs::HsComparison c = hs::squared_refined(inst, Weight(0.3), RefinementDepth(3));
    expect_rel(c.lhs.direct, 26.220364011667268024, 1e-13);
    expect_rel(c.rhs.direct, 26.3, 1e-13);
    expect_rel(c.lhs.eigenbasis, 26.220364011667268024, 1e-13);
}

TEST(HsRoutes, DirectAndEigenbasisAgree) {
    Rng rng(41);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 5;
        const hs::Instance inst(PsdMatrix(random_spd(n, rng, 1e-2, 1e2, true).matrix()),
                                PsdMatrix(random_spd(n, rng, 1e-2, 1e2, true).matrix()), random_matrix(n, rng, true));
        const Weight nu(rng.uniform());
        const RefinementDepth depth(2 + t % 4);
        EXPECT_LT(hs::squared_refined(inst, nu, depth).route_gap(), 1e-10);
        for (const auto& c : hs::squared_reverse(inst, nu, depth)) EXPECT_LT(c.route_gap(), 1e-10);
        for (const auto& c : hs::heinz_refined(inst, nu, depth)) EXPECT_LT(c.route_gap(), 1e-10);
        EXPECT_LT(hs::heinz_reverse(inst, Weight(0.25 * nu.value()), depth).route_gap(), 1e-10);
    }
}

TEST(HsRoutes, SingularFactorsAreAccepted) {
    const hs::Instance inst(PsdMatrix(Matrix::diagonal({0.0, 2.0})), PsdMatrix(Matrix::diagonal({1.0, 0.0})),
                            Matrix::from_rows({{1.0, 2.0}, {3.0, 4.0}}));
    const hs::HsComparison c = hs::squared_refined(inst, Weight(0.3), RefinementDepth(2));
    EXPECT_LT(c.route_gap(), 1e-12);
    EXPECT_LE(c.lhs.direct, c.rhs.direct * (1 + 1e-12));
}

TEST(HsDiagonal, ReducesToScalarComparisons) {
    Rng rng(42);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 4;
        const auto lambda = random_spectrum(rng, n), mu = random_spectrum(rng, n);
        const Matrix x = random_matrix(n, rng, true);
        const auto inst = diagonal_instance(lambda, mu, x);
        const Weight nu(rng.uniform());
        const RefinementDepth depth(2 + t % 4);

        const hs::HsComparison sq = hs::squared_refined(inst, nu, depth);
        expect_rel(sq.lhs.direct,
                   weighted_sum(lambda, mu, x, [&](double l, double m) { return squared_refined(nu, ScalarPair(l, m), depth).lhs; }),
                   1e-10);
        expect_rel(sq.rhs.direct,
                   weighted_sum(lambda, mu, x, [&](double l, double m) { return squared_refined(nu, ScalarPair(l, m), depth).rhs; }),
                   1e-10);

        for (const auto& c : hs::squared_reverse(inst, nu, depth)) {
            auto side = [&](bool lhs) {
                return weighted_sum(lambda, mu, x, [&](double l, double m) {
                    for (const Comparison& s : squared_reverse(nu, ScalarPair(l, m), depth))
                        if (s.branch == c.branch) return lhs ? s.lhs : s.rhs;
                    throw std::runtime_error("branch missing");
                });
            };
            expect_rel(c.lhs.direct, side(true), 1e-10);
            expect_rel(c.rhs.direct, side(false), 1e-10);
        }

        for (const auto& c : hs::heinz_refined(inst, nu, depth)) {
            auto side = [&](bool lhs) {
                return weighted_sum(lambda, mu, x, [&](double l, double m) {
                    for (const Comparison& s : heinz_refined_scalar(nu, ScalarPair(l, m), depth))
                        if (s.branch == c.branch) return lhs ? s.lhs : s.rhs;
                    throw std::runtime_error("branch missing");
                });
            };
            expect_rel(c.lhs.direct, side(true), 1e-10);
            expect_rel(c.rhs.direct, side(false), 1e-10);
        }
    }
}

TEST(HsOrder, ComparisonsHold) {
    Rng rng(43);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 5;
        const hs::Instance inst(PsdMatrix(random_spd(n, rng, 1e-2, 1e2, t % 2).matrix()),
                                PsdMatrix(random_spd(n, rng, 1e-2, 1e2, t % 2).matrix()), random_matrix(n, rng, t % 2));
        const Weight nu(rng.uniform());
        const RefinementDepth depth(2 + t % 5);
        auto holds = [](const hs::HsComparison& c) { return c.lhs.direct <= c.rhs.direct * (1 + 1e-10); };
        EXPECT_TRUE(holds(hs::squared_refined(inst, nu, depth)));
        for (const auto& c : hs::squared_reverse(inst, nu, depth)) EXPECT_TRUE(holds(c));
        for (const auto& c : hs::heinz_refined(inst, nu, depth)) EXPECT_TRUE(holds(c));
        EXPECT_TRUE(holds(hs::heinz_reverse(inst, Weight(0.25 * nu.value()), depth)));
    }
}

TEST(HsErrors, Preconditions) {
    const auto inst = diagonal_instance({1.0, 2.0}, {3.0, 4.0}, Matrix::identity(2));
    try {
        hs::heinz_reverse(inst, Weight(0.3), RefinementDepth(2));
        ADD_FAILURE() << "expected branch error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::branch);
    }
    EXPECT_THROW(hs::squared_refined(inst, Weight(0.3), RefinementDepth(1)), Error);
    EXPECT_THROW(diagonal_instance({1.0, 2.0}, {3.0, 4.0}, Matrix::identity(3)), Error);
}
