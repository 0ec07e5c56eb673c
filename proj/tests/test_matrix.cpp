#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "youngheinz/errors.hpp"
#include "youngheinz/matrix.hpp"
#include "youngheinz/norms.hpp"
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

double max_abs_diff(const Matrix& m, const EMatrix& e) { return (to_eigen(m) - e).cwiseAbs().maxCoeff(); }

// Eigen's function of a Hermitian matrix, used as the oracle.
EMatrix eigen_apply(const EMatrix& m, const std::function<double(double)>& f) {
    Eigen::SelfAdjointEigenSolver<EMatrix> es(m);
    Eigen::VectorXd values = es.eigenvalues().unaryExpr(f);
    return es.eigenvectors() * values.asDiagonal() * es.eigenvectors().adjoint();
}

void expect_code(ErrorCode code, const std::function<void()>& body) {
    try {
        body();
        ADD_FAILURE() << "expected " << to_string(code);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), code) << e.what();
    }
}

}  // namespace

TEST(Rng, DeterministicStreams) {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.bits();
        EXPECT_EQ(x, b.bits());
        (void)c.bits();
    }
    EXPECT_NE(Rng(42).bits(), Rng(43).bits());
    EXPECT_NE(derive_seed(1, "scalar.young.refined", 0), derive_seed(1, "scalar.young.refined", 1));
    EXPECT_NE(derive_seed(1, "a", 0), derive_seed(1, "b", 0));
}

TEST(Rng, UniformAndBelowRanges) {
    Rng rng(5);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(rng.below(7), 7u);
        const double l = rng.log_uniform(1e-3, 1e3);
        EXPECT_GE(l, 1e-3 * (1 - 1e-12));
        EXPECT_LE(l, 1e3 * (1 + 1e-12));
    }
}

TEST(Eigensolver, MatchesEigen) {
    Rng rng(1);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 12u}) {
        for (bool complex : {false, true}) {
            const Matrix g = random_matrix(n, rng, complex);
            const HermitianMatrix h = HermitianMatrix::symmetrize(g + g.adjoint());
            const EigenDecomposition d = eig_hermitian(h);
            Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(h.matrix()));
            const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(d.values[i], es.eigenvalues()(i), 1e-13 * scale);
            EXPECT_LT(max_abs_diff(reconstruct(d.vectors, d.values).matrix(), to_eigen(h.matrix())), 1e-13 * scale);
            const EMatrix q = to_eigen(d.vectors);
            EXPECT_LT((q.adjoint() * q - EMatrix::Identity(n, n)).cwiseAbs().maxCoeff(), 1e-13);
        }
    }
}

TEST(Eigensolver, HandlesRepeatedEigenvalues) {
    const EigenDecomposition d = eig_hermitian(HermitianMatrix(Matrix::identity(4)));
    for (double v : d.values) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(Hermitian, RejectsNonHermitianInput) {
    expect_code(ErrorCode::shape, [] { HermitianMatrix(Matrix::from_rows({{1.0, 2.0}, {0.0, 1.0}})); });
    expect_code(ErrorCode::domain, [] { HermitianMatrix(Matrix::from_rows({{NAN, 0.0}, {0.0, 1.0}})); });
    // Roundoff-sized asymmetry is accepted and averaged away.
    const HermitianMatrix h(Matrix::from_rows({{1.0, 2.0 + 1e-14}, {2.0, 1.0}}));
    EXPECT_EQ(h.matrix().hermiticity_defect(), 0.0);
}

TEST(Psd, PowersMatchEigen) {
    Rng rng(2);
    for (std::size_t n : {2u, 4u, 8u}) {
        const SpdMatrix a = random_spd(n, rng, 1e-2, 1e2, true);
        const EMatrix ea = to_eigen(a.matrix());
        for (double p : {-1.0, -0.5, 0.3, 0.5, 1.7}) {
            const EMatrix expected = eigen_apply(ea, [p](double x) { return std::pow(x, p); });
            const double scale = std::max(1.0, expected.cwiseAbs().maxCoeff());
            EXPECT_LT(max_abs_diff(a.power(p).matrix(), expected), 1e-11 * scale) << "p=" << p;
        }
        EXPECT_LT(max_abs_diff(a.inverse().matrix(), ea.inverse()), 1e-10 * ea.inverse().cwiseAbs().maxCoeff());
    }
}

TEST(Psd, SingularConventions) {
    const PsdMatrix p(Matrix::diagonal({0.0, 4.0}));
    EXPECT_EQ(p.power(0.5).matrix()(0, 0), Complex(0.0));
    EXPECT_EQ(p.power(0.5).matrix()(1, 1), Complex(2.0));
    EXPECT_EQ(p.power(0.0).matrix()(0, 0), Complex(1.0));
    expect_code(ErrorCode::definiteness, [&] { p.power(-1.0); });
    expect_code(ErrorCode::definiteness, [] { PsdMatrix(Matrix::diagonal({-1.0, 1.0})); });
    expect_code(ErrorCode::definiteness, [] { SpdMatrix(Matrix::diagonal({0.0, 1.0})); });
}

TEST(Means, SharpMatchesEigenFormula) {
    Rng rng(3);
    for (std::size_t n : {2u, 3u, 8u}) {
        const SpdMatrix a = random_spd(n, rng, 1e-2, 1e2, true);
        const SpdMatrix b = random_spd(n, rng, 1e-2, 1e2, true);
        const EMatrix ea = to_eigen(a.matrix()), eb = to_eigen(b.matrix());
        const EMatrix half = eigen_apply(ea, [](double x) { return std::sqrt(x); });
        const EMatrix inv_half = eigen_apply(ea, [](double x) { return 1.0 / std::sqrt(x); });
        const EMatrix x = inv_half * eb * inv_half;
        for (double nu : {-0.5, 0.0, 0.3, 1.0, 1.5}) {
            const EMatrix expected = half * eigen_apply(0.5 * (x + x.adjoint()), [nu](double t) { return std::pow(t, nu); }) * half;
            const double scale = std::max(1.0, expected.cwiseAbs().maxCoeff());
            EXPECT_LT(max_abs_diff(sharp(a, b, nu).matrix(), expected), 1e-9 * scale) << "nu=" << nu;
            EXPECT_LT(max_abs_diff(MeanFrame(a, b).sharp(nu).matrix(), expected), 1e-9 * scale);
        }
        EXPECT_LT(max_abs_diff(sharp(a, b, 0.0).matrix(), ea), 1e-10 * ea.cwiseAbs().maxCoeff());
        EXPECT_LT(max_abs_diff(sharp(a, b, 1.0).matrix(), eb), 1e-9 * eb.cwiseAbs().maxCoeff());
        const EMatrix arith = 0.7 * ea + 0.3 * eb;
        EXPECT_LT(max_abs_diff(nabla(a.hermitian(), b.hermitian(), 0.3).matrix(), arith), 1e-12 * arith.cwiseAbs().maxCoeff());
    }
}

TEST(Means, CommutingPairReducesToScalars) {
    const SpdMatrix a(Matrix::diagonal({1.0, 4.0})), b(Matrix::diagonal({9.0, 2.0}));
    const Matrix g = sharp(a, b, 0.5).matrix();
    EXPECT_NEAR(g(0, 0).real(), 3.0, 1e-14);
    EXPECT_NEAR(g(1, 1).real(), std::sqrt(8.0), 1e-14);
    EXPECT_NEAR(std::abs(g(0, 1)), 0.0, 1e-14);
}

TEST(Loewner, CertifiesOrder) {
    const HermitianMatrix small(Matrix::diagonal({1.0, 2.0})), big(Matrix::diagonal({1.0, 3.0}));
    EXPECT_TRUE(loewner_leq(small, big, 1e-12).holds);
    EXPECT_FALSE(loewner_leq(big, small, 1e-12).holds);
    const LoewnerVerdict v = loewner_leq(small, big, 1e-12);
    EXPECT_NEAR(v.min_eig_of_difference, 0.0, 1e-15);
    EXPECT_GE(v.tolerance_used, 1e-12 * 3.0);
    expect_code(ErrorCode::shape, [&] { loewner_leq(small, HermitianMatrix(Matrix::identity(3)), 1e-12); });
}

TEST(SpectralBounds, CoveringAndCertify) {
    const SpdMatrix a(Matrix::diagonal({1.0, 4.0})), b(Matrix::diagonal({0.5, 2.0}));
    const SpectralBounds s = SpectralBounds::covering(a, b);
    EXPECT_DOUBLE_EQ(s.m, 0.5);
    EXPECT_DOUBLE_EQ(s.M, 4.0);
    s.certify(a);
    expect_code(ErrorCode::precondition, [&] { SpectralBounds(1.0, 2.0).certify(a); });
    expect_code(ErrorCode::domain, [] { SpectralBounds(2.0, 1.0); });
}

TEST(RandomMatrices, SpdSpectrumInRange) {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        const SpdMatrix a = random_spd(6, rng, 1e-2, 1e2, t % 2 == 0);
        EXPECT_GE(a.min_eigenvalue(), 1e-2 * (1 - 1e-10));
        EXPECT_LE(a.max_eigenvalue(), 1e2 * (1 + 1e-10));
    }
}

TEST(Norms, MatchSingularValues) {
    Rng rng(4);
    for (std::size_t n : {2u, 3u, 6u}) {
        const Matrix x = random_matrix(n, rng, true);
        Eigen::JacobiSVD<EMatrix> svd(to_eigen(x));
        const Eigen::VectorXd sv = svd.singularValues();
        const auto ours = singular_values(x);
        for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(ours[i], sv(i), 1e-12 * sv(0));
        EXPECT_NEAR(norm(x, NormKind::spectral()), sv(0), 1e-12 * sv(0));
        EXPECT_NEAR(norm(x, NormKind::trace()), sv.sum(), 1e-12 * sv.sum());
        EXPECT_NEAR(norm(x, NormKind::frobenius()), to_eigen(x).norm(), 1e-12 * sv.sum());
        EXPECT_NEAR(norm(x, NormKind::schatten(3)), std::cbrt(sv.array().cube().sum()), 1e-12 * sv.sum());
        EXPECT_NEAR(norm(x, NormKind::ky_fan(2)), sv(0) + sv(1), 1e-12 * sv.sum());
    }
}

TEST(Norms, ParseAndErrors) {
    EXPECT_EQ(NormKind::parse("schatten:3").name(), "schatten:3");
    EXPECT_EQ(NormKind::parse("ky_fan:2").name(), "ky_fan:2");
    EXPECT_EQ(NormKind::parse("frobenius").name(), "frobenius");
    expect_code(ErrorCode::usage, [] { NormKind::parse("schatten:x"); });
    expect_code(ErrorCode::usage, [] { NormKind::parse("euclid"); });
    expect_code(ErrorCode::domain, [] { NormKind::schatten(0.5); });
    expect_code(ErrorCode::domain, [] { norm(Matrix::identity(2), NormKind::ky_fan(3)); });
}
