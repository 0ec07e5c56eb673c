#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace yh {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(const std::vector<double>& values);
    static Matrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t dim() const noexcept { return dim_; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<Complex>& data() const noexcept { return data_; }

    Matrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// ||M - M*||_F
    double hermiticity_defect() const;
    bool is_real() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(Complex scale);

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, Complex scale) { return lhs *= scale; }
    friend Matrix operator*(Complex scale, Matrix rhs) { return rhs *= scale; }
    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Hermitian matrix. Construction checks the input against a relative
/// tolerance and stores the exact average (M + M*)/2.
class HermitianMatrix {
public:
    static constexpr double kHermitianTolerance = 1e-10;

    explicit HermitianMatrix(const Matrix& m);
    /// Skips the tolerance check; used for results that are Hermitian up to roundoff by construction.
    static HermitianMatrix symmetrize(const Matrix& m);

    std::size_t dim() const noexcept { return m_.dim(); }
    const Matrix& matrix() const noexcept { return m_; }
    double operator()(std::size_t i) const { return m_(i, i).real(); }

    double spectral_norm() const;

    friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
    friend HermitianMatrix operator*(double s, const HermitianMatrix& a);

private:
    struct Trusted {};
    HermitianMatrix(const Matrix& m, Trusted);
    Matrix m_;
};

struct EigenDecomposition {
    Matrix vectors;              // unitary, columns are eigenvectors
    std::vector<double> values;  // ascending
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiTolerance = 1e-14;

/// Cyclic complex Jacobi. Throws an accuracy error after kJacobiMaxSweeps.
EigenDecomposition eig_hermitian(const HermitianMatrix& h);

/// Q diag(values) Q*.
HermitianMatrix reconstruct(const Matrix& vectors, const std::vector<double>& values);

/// Positive semidefinite matrix with its eigendecomposition computed once.
/// Eigenvalues within roundoff of zero are clamped to exactly zero.
class PsdMatrix {
public:
    explicit PsdMatrix(const HermitianMatrix& h);
    explicit PsdMatrix(const Matrix& m) : PsdMatrix(HermitianMatrix(m)) {}

    std::size_t dim() const noexcept { return h_.dim(); }
    const HermitianMatrix& hermitian() const noexcept { return h_; }
    const Matrix& matrix() const noexcept { return h_.matrix(); }
    const EigenDecomposition& eigen() const noexcept { return eig_; }
    double min_eigenvalue() const { return eig_.values.front(); }
    double max_eigenvalue() const { return eig_.values.back(); }

    /// Q f(Lambda) Q*.
    HermitianMatrix apply(const std::function<double(double)>& f) const;
    /// Fractional power with 0^p = 0 for p > 0 and 0^0 = 1; negative p needs a definite matrix.
    PsdMatrix power(double p) const;

protected:
    PsdMatrix(HermitianMatrix h, EigenDecomposition eig);

    HermitianMatrix h_;
    EigenDecomposition eig_;
};

/// Strictly positive definite matrix.
class SpdMatrix : public PsdMatrix {
public:
    explicit SpdMatrix(const HermitianMatrix& h);
    explicit SpdMatrix(const Matrix& m) : SpdMatrix(HermitianMatrix(m)) {}

    SpdMatrix power(double p) const;
    SpdMatrix inverse() const { return power(-1.0); }

private:
    SpdMatrix(HermitianMatrix h, EigenDecomposition eig);
    friend class MeanFrame;
};

/// (1 - nu) A + nu B for any real nu.
HermitianMatrix nabla(const HermitianMatrix& a, const HermitianMatrix& b, double nu);
/// A^(1/2) (A^(-1/2) B A^(-1/2))^nu A^(1/2) for any real nu.
SpdMatrix sharp(const SpdMatrix& a, const SpdMatrix& b, double nu);

/// Functional calculus on X = A^(-1/2) B A^(-1/2): every weighted mean of
/// the pair is A^(1/2) f(X) A^(1/2) for a scalar f, so one eigendecomposition
/// of X serves all of them.
class MeanFrame {
public:
    MeanFrame(const SpdMatrix& a, const SpdMatrix& b);

    std::size_t dim() const noexcept { return a_half_.dim(); }
    /// Eigenvalues of X, ascending.
    const std::vector<double>& spectrum() const noexcept { return x_.values; }

    HermitianMatrix transfer(const std::function<double(double)>& f) const;
    HermitianMatrix sharp(double nu) const;

private:
    Matrix a_half_;
    EigenDecomposition x_;
    Matrix w_;  // A^(1/2) Q
};

struct LoewnerVerdict {
    bool holds = false;
    double min_eig_of_difference = 0.0;
    double tolerance_used = 0.0;
};

/// Certifies L <= R: min eig(R - L) >= -tol_rel * max(1, ||L||_2, ||R||_2).
LoewnerVerdict loewner_leq(const HermitianMatrix& lhs, const HermitianMatrix& rhs, double tol_rel);

struct SpectralBounds {
    double m = 0.0;
    double M = 0.0;

    SpectralBounds(double lower, double upper);
    /// Tightest bounds covering both matrices.
    static SpectralBounds covering(const SpdMatrix& a, const SpdMatrix& b);
    /// Precondition error unless mI <= x <= MI up to roundoff.
    void certify(const PsdMatrix& x) const;
};

}  // namespace yh
