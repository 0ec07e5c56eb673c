#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "youngheinz/errors.hpp"
#include "youngheinz/operator_ineq.hpp"
#include "youngheinz/random.hpp"

using namespace yh;

namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const Matrix& m) {
    EMatrix out(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
    return out;
}

EMatrix eigen_apply(const EMatrix& m, const std::function<double(double)>& f) {
    Eigen::SelfAdjointEigenSolver<EMatrix> es(0.5 * (m + m.adjoint()));
    Eigen::VectorXd values = es.eigenvalues().unaryExpr(f);
    return es.eigenvectors() * values.asDiagonal() * es.eigenvectors().adjoint();
}

// Independent evaluation of every mean by Eigen, term by term from the stated formulas.
struct Oracle {
    EMatrix a, b, half, inv_half, x;

    Oracle(const SpdMatrix& sa, const SpdMatrix& sb) : a(to_eigen(sa.matrix())), b(to_eigen(sb.matrix())) {
        half = eigen_apply(a, [](double t) { return std::sqrt(t); });
        inv_half = eigen_apply(a, [](double t) { return 1.0 / std::sqrt(t); });
        x = inv_half * b * inv_half;
    }
    EMatrix sharp(double p) const { return half * eigen_apply(x, [p](double t) { return std::pow(t, p); }) * half; }
    EMatrix nabla(double nu) const { return (1.0 - nu) * a + nu * b; }
    // A#_p B + A#_(p + 2 step) B - 2 A#_(p + step) B
    EMatrix block(double p, double step) const { return sharp(p) + sharp(p + 2 * step) - 2.0 * sharp(p + step); }
};

// Floor-based level quantities, written out again so the oracle shares no code with the library.
long k_of(int j, double nu) { return static_cast<long>(std::floor(std::ldexp(nu, j - 1))); }
double s_of(int j, double nu) {
    const long r = static_cast<long>(std::floor(std::ldexp(nu, j)));
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    return sign * std::ldexp(nu, j - 1) - sign * std::floor((r + 1) / 2.0);
}

double rel_diff(const Matrix& ours, const EMatrix& oracle) {
    return (to_eigen(ours) - oracle).cwiseAbs().maxCoeff() / std::max(1.0, oracle.cwiseAbs().maxCoeff());
}

constexpr double kOracleTol = 1e-9;

struct Pair {
    SpdMatrix a, b;
};

Pair random_pair(Rng& rng, std::size_t n, bool complex) {
    return {random_spd(n, rng, 1e-1, 1e1, complex), random_spd(n, rng, 1e-1, 1e1, complex)};
}

double loewner_margin(const op::OperatorComparison& c) {
    const LoewnerVerdict v = loewner_leq(c.lhs, c.rhs, 1.0);
    return v.min_eig_of_difference / v.tolerance_used;
}

}  // namespace

TEST(OperatorOracle, YoungRefined) {
    Rng rng(21);
    for (int t = 0; t < 20; ++t) {
        const Pair p = random_pair(rng, 2 + t % 5, t % 2);
        const double nu = rng.uniform();
        const int n = 1 + t % 4;
        const Oracle o(p.a, p.b);
        EMatrix lhs = o.sharp(nu);
        for (int j = 1; j <= n; ++j) lhs += s_of(j, nu) * o.block(std::ldexp(double(k_of(j, nu)), 1 - j), std::ldexp(1.0, -j));
        const auto c = op::young_refined(MeanFrame(p.a, p.b), Weight(nu), RefinementDepth(n));
        EXPECT_LT(rel_diff(c.lhs.matrix(), lhs), kOracleTol);
        EXPECT_LT(rel_diff(c.rhs.matrix(), o.nabla(nu)), kOracleTol);
    }
}

TEST(OperatorOracle, ReverseBothBranches) {
    Rng rng(22);
    for (int t = 0; t < 20; ++t) {
        const Pair p = random_pair(rng, 2 + t % 5, t % 2);
        const double nu = rng.uniform();
        const int n = 1 + t % 4;
        const Oracle o(p.a, p.b);
        const auto bc = op::reverse_refined(MeanFrame(p.a, p.b), Weight(nu), RefinementDepth(n));
        ASSERT_EQ(bc.size(), 1u);
        const EMatrix mean_gap = o.nabla(0.5) - o.sharp(0.5);
        EMatrix lhs = o.nabla(nu);
        EMatrix rhs;
        if (nu <= 0.5) {
            for (int j = 1; j <= n; ++j) {
                const double beta = std::ldexp(double(k_of(j, 2 * nu)), -j);
                lhs += s_of(j, 2 * nu) * o.block(1 - beta - std::ldexp(1.0, -j), std::ldexp(1.0, -j - 1));
            }
            rhs = o.sharp(nu) + 2 * (1 - nu) * mean_gap;
        } else {
            for (int j = 1; j <= n; ++j) {
                const double gamma = std::ldexp(double(k_of(j, 2 - 2 * nu)), -j);
                lhs += s_of(j, 2 - 2 * nu) * o.block(gamma, std::ldexp(1.0, -j - 1));
            }
            rhs = o.sharp(nu) + 2 * nu * mean_gap;
        }
        EXPECT_LT(rel_diff(bc[0].lhs.matrix(), lhs), kOracleTol);
        EXPECT_LT(rel_diff(bc[0].rhs.matrix(), rhs), kOracleTol);
    }
}

TEST(OperatorOracle, MinusReverse) {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        const Pair p = random_pair(rng, 2 + t % 5, t % 2);
        const double nu = 3 * rng.uniform();
        const int n = t % 5;
        const Oracle o(p.a, p.b);
        EMatrix lhs = o.nabla(-nu);
        for (int j = 1; j <= n; ++j)
            lhs += std::ldexp(nu, j - 1) * (o.a - 2.0 * o.sharp(std::ldexp(1.0, -j)) + o.sharp(std::ldexp(1.0, 1 - j)));
        const auto c = op::minus_reverse(MeanFrame(p.a, p.b), Weight(nu), RefinementDepth(n));
        EXPECT_LT(rel_diff(c.lhs.matrix(), lhs), kOracleTol);
        EXPECT_LT(rel_diff(c.rhs.matrix(), o.sharp(-nu)), kOracleTol);
    }
}

TEST(OperatorOracle, MinusViaSBothForms) {
    Rng rng(24);
    for (int t = 0; t < 20; ++t) {
        const Pair p = random_pair(rng, 2 + t % 5, t % 2);
        const double nu = rng.uniform();
        const int n = 1 + t % 4;
        const Oracle o(p.a, p.b);
        EMatrix transferred = o.nabla(-nu);
        EMatrix inner = EMatrix::Zero(o.a.rows(), o.a.cols());
        for (int j = 1; j <= n; ++j) {
            const double alpha = std::ldexp(double(k_of(j, nu)), 1 - j);
            transferred += s_of(j, nu) * o.block(alpha, std::ldexp(1.0, -j));
            inner += s_of(j, nu) * o.block(1 + alpha, std::ldexp(1.0, -j));
        }
        const EMatrix literal = o.nabla(-nu) + o.a * o.b.inverse() * o.a * inner;
        const auto r = op::minus_reverse_via_s(p.a, p.b, Weight(nu), RefinementDepth(n));
        EXPECT_LT(rel_diff(r.transferred.lhs.matrix(), transferred), kOracleTol);
        EXPECT_LT(rel_diff(r.transferred.rhs.matrix(), o.sharp(-nu)), kOracleTol);
        EXPECT_LT(rel_diff(r.literal.lhs, literal), 1e-8);
    }
}

TEST(OperatorOracle, Squared) {
    Rng rng(25);
    for (int t = 0; t < 20; ++t) {
        const Pair p = random_pair(rng, 2 + t % 5, t % 2);
        const double nu = rng.uniform();
        const int n = 2 + t % 3;
        const Oracle o(p.a, p.b);
        EMatrix lhs = o.sharp(2 - 2 * nu);
        for (int j = 2; j <= n; ++j) {
            const double alpha = std::ldexp(double(k_of(j, nu)), 1 - j);
            lhs += s_of(j, nu) * o.block(2 - 2 * alpha - std::ldexp(1.0, 2 - j), std::ldexp(1.0, 1 - j));
        }
        const EMatrix rhs = nu <= 0.5 ? EMatrix((1 - 2 * nu) * o.b * o.a.inverse() * o.b + 2 * nu * o.b)
                                      : EMatrix((2 * nu - 1) * o.a + (2 - 2 * nu) * o.b);
        const auto bc = op::squared(MeanFrame(p.a, p.b), Weight(nu), RefinementDepth(n));
        ASSERT_EQ(bc.size(), 1u);
        EXPECT_LT(rel_diff(bc[0].lhs.matrix(), lhs), kOracleTol);
        EXPECT_LT(rel_diff(bc[0].rhs.matrix(), rhs), kOracleTol);
    }
}

TEST(OperatorOracle, KantoMatchesStatedFormula) {
    Rng rng(26);
    for (int t = 0; t < 20; ++t) {
        const Pair p = random_pair(rng, 2 + t % 5, t % 2);
        const double nu = rng.uniform();
        const int n = t % 4;
        const SpectralBounds bounds = SpectralBounds::covering(p.a, p.b);
        const Oracle o(p.a, p.b);
        const double h = std::pow(bounds.M / bounds.m, std::ldexp(1.0, -n));
        const double scaled = std::ldexp(nu, n);
        const double alpha = std::floor(scaled) + 1 - scaled;
        const double k = (1 + h) * (1 + h) / (4 * h);
        EMatrix lhs = std::pow(k, std::min(alpha, 1 - alpha)) * o.sharp(nu);
        for (int j = 1; j <= n; ++j) lhs += s_of(j, nu) * o.block(std::ldexp(double(k_of(j, nu)), 1 - j), std::ldexp(1.0, -j));
        const auto c = op::kanto(p.a, p.b, Weight(nu), RefinementDepth(n), bounds);
        EXPECT_LT(rel_diff(c.lhs.matrix(), lhs), kOracleTol);
        EXPECT_LT(rel_diff(c.rhs.matrix(), o.nabla(nu)), kOracleTol);
    }
}

TEST(OperatorOrder, RefinementsHoldOnRandomPairs) {
    Rng rng(27);
    for (int t = 0; t < 200; ++t) {
        const Pair p = random_pair(rng, 2 + t % 7, t % 2);
        const MeanFrame frame(p.a, p.b);
        const Weight nu(rng.uniform());
        const RefinementDepth n(2 + t % 4);
        EXPECT_GE(loewner_margin(op::young_refined(frame, nu, n)), -1e-10);
        for (const auto& c : op::reverse_refined(frame, nu, n)) EXPECT_GE(loewner_margin(c), -1e-10);
        EXPECT_GE(loewner_margin(op::minus_reverse(frame, Weight(3 * nu.value()), n)), -1e-10);
        EXPECT_GE(loewner_margin(op::minus_reverse_via_s(p.a, p.b, nu, n).transferred), -1e-10);
        for (const auto& c : op::squared(frame, nu, n)) EXPECT_GE(loewner_margin(c), -1e-10);
    }
}

TEST(OperatorOrder, ViaSFormsAgreeWhenAIsIdentity) {
    Rng rng(28);
    const SpdMatrix id(Matrix::identity(4));
    const SpdMatrix b = random_spd(4, rng, 1e-1, 1e1, true);
    const auto r = op::minus_reverse_via_s(id, b, Weight(0.3), RefinementDepth(3));
    EXPECT_LT(rel_diff(r.literal.lhs, to_eigen(r.transferred.lhs.matrix())), 1e-12);
    EXPECT_LT(r.literal.hermiticity_defect, 1e-14);
}

TEST(OperatorOrder, LiteralFormIsNotHermitianInGeneral) {
    Rng rng(29);
    const Pair p = random_pair(rng, 4, true);
    EXPECT_GT(op::minus_reverse_via_s(p.a, p.b, Weight(0.3), RefinementDepth(3)).literal.hermiticity_defect, 1e-6);
}

TEST(OperatorSchedule, ExponentsFollowFloorDefinitions) {
    const auto levels = op::exponent_schedule(Weight(0.3), RefinementDepth(4));
    ASSERT_EQ(levels.size(), 4u);
    for (const auto& l : levels) {
        EXPECT_DOUBLE_EQ(l.alpha, std::ldexp(double(k_of(l.j, 0.3)), 1 - l.j));
        EXPECT_DOUBLE_EQ(l.beta, std::ldexp(double(k_of(l.j, 0.6)), -l.j));
        EXPECT_DOUBLE_EQ(l.gamma, std::ldexp(double(k_of(l.j, 1.4)), -l.j));
    }
}

TEST(OperatorErrors, Preconditions) {
    const SpdMatrix a(Matrix::diagonal({1.0, 2.0})), b(Matrix::diagonal({3.0, 4.0}));
    const MeanFrame frame(a, b);
    EXPECT_THROW(op::squared(frame, Weight(0.3), RefinementDepth(1)), Error);
    EXPECT_THROW(op::young_refined(frame, Weight(1.2), RefinementDepth(1)), Error);
    try {
        op::kanto(a, b, Weight(0.3), RefinementDepth(1), SpectralBounds(1.5, 4.0));
        ADD_FAILURE() << "bounds not certified";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::precondition);
    }
}
