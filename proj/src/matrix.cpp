#include "youngheinz/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "youngheinz/errors.hpp"

namespace yh {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_same_dim(const Matrix& a, const Matrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        std::ostringstream os;
        os << what << ": dimension mismatch " << a.dim() << " vs " << b.dim();
        fail(ErrorCode::shape, os.str());
    }
}

void require_finite(const Matrix& m) {
    for (const Complex& z : m.data())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            fail(ErrorCode::domain, "matrix has a non-finite entry");
}

// Sorts eigenpairs ascending.
EigenDecomposition sorted(const Matrix& vectors, const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    EigenDecomposition out{Matrix(n), std::vector<double>(n)};
    for (std::size_t c = 0; c < n; ++c) {
        out.values[c] = values[order[c]];
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = vectors(r, order[c]);
    }
    return out;
}

// W diag(d) W*.
Matrix congruence(const Matrix& w, const std::vector<double>& d) {
    const std::size_t n = w.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += w(i, k) * d[k] * std::conj(w(j, k));
            out(i, j) = acc;
            out(j, i) = std::conj(acc);
        }
        out(i, i) = out(i, i).real();
    }
    return out;
}

double spectral_radius(const std::vector<double>& values) {
    double r = 0.0;
    for (double v : values) r = std::max(r, std::fabs(v));
    return r;
}

}  // namespace

// Matrix -----------------------------------------------------------------------------

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(const std::vector<double>& values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t n = rows.size();
    Matrix m(n);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n) fail(ErrorCode::shape, "matrix rows must form a square");
        std::size_t j = 0;
        for (const Complex& z : row) m(i, j++) = z;
        ++i;
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    // scaled accumulation keeps tiny and huge entries from under/overflowing
    double scale = 0.0;
    for (const Complex& z : data_) scale = std::max({scale, std::fabs(z.real()), std::fabs(z.imag())});
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex& z : data_) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
}

double Matrix::hermiticity_defect() const {
    return (*this - adjoint()).frobenius_norm();
}

bool Matrix::is_real() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex& z) { return z.imag() == 0.0; });
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require_same_dim(*this, other, "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require_same_dim(*this, other, "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(Complex scale) {
    for (Complex& z : data_) z *= scale;
    return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    require_same_dim(lhs, rhs, "matrix product");
    const std::size_t n = lhs.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Complex l = lhs(i, k);
            if (l == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += l * rhs(k, j);
        }
    return out;
}

// HermitianMatrix --------------------------------------------------------------------

HermitianMatrix::HermitianMatrix(const Matrix& m, Trusted) : m_(m) {
    const std::size_t n = m_.dim();
    for (std::size_t i = 0; i < n; ++i) {
        m_(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = avg;
            m_(j, i) = std::conj(avg);
        }
    }
}

HermitianMatrix::HermitianMatrix(const Matrix& m) : HermitianMatrix(m, Trusted{}) {
    if (m.dim() == 0) fail(ErrorCode::shape, "matrix must have positive dimension");
    require_finite(m);
    const double defect = m.hermiticity_defect();
    if (defect > kHermitianTolerance * m.frobenius_norm()) {
        std::ostringstream os;
        os.precision(3);
        os << "matrix is not Hermitian (relative defect " << defect / m.frobenius_norm() << ")";
        fail(ErrorCode::shape, os.str());
    }
}

HermitianMatrix HermitianMatrix::symmetrize(const Matrix& m) {
    require_finite(m);
    return HermitianMatrix(m, Trusted{});
}

double HermitianMatrix::spectral_norm() const {
    return spectral_radius(eig_hermitian(*this).values);
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator*(double s, const HermitianMatrix& a) {
    return HermitianMatrix(a.m_ * Complex(s), HermitianMatrix::Trusted{});
}

// Jacobi --------------------------------------------------------------------------------

EigenDecomposition eig_hermitian(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    Matrix a = h.matrix();
    Matrix v = Matrix::identity(n);
    const double norm = a.frobenius_norm();

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const double target = std::max(kJacobiTolerance, 4.0 * static_cast<double>(n) * kEps) * norm;
    int sweep = 0;
    while (norm > 0.0 && off_norm() > target) {
        if (++sweep > kJacobiMaxSweeps)
            fail(ErrorCode::accuracy, "Hermitian eigensolver did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0) continue;
                // rotate the phase of a_pq out, then a real rotation
                const Complex phase = a(p, q) / mag;
                const Complex phase_conj = std::conj(phase);
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mp = a(k, p);
                    const Complex mq = a(k, q);
                    a(k, p) = c * mp - s * phase_conj * mq;
                    a(k, q) = s * mp + c * phase_conj * mq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex np = a(p, k);
                    const Complex nq = a(q, k);
                    a(p, k) = c * np - s * phase * nq;
                    a(q, k) = s * np + c * phase * nq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex mp = v(k, p);
                    const Complex mq = v(k, q);
                    v(k, p) = c * mp - s * phase_conj * mq;
                    v(k, q) = s * mp + c * phase_conj * mq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
    return sorted(v, values);
}

HermitianMatrix reconstruct(const Matrix& vectors, const std::vector<double>& values) {
    if (vectors.dim() != values.size()) fail(ErrorCode::shape, "eigenpair count mismatch");
    return HermitianMatrix::symmetrize(congruence(vectors, values));
}

// PsdMatrix / SpdMatrix -----------------------------------------------------------------------

PsdMatrix::PsdMatrix(HermitianMatrix h, EigenDecomposition eig) : h_(std::move(h)), eig_(std::move(eig)) {}

PsdMatrix::PsdMatrix(const HermitianMatrix& h) : h_(h), eig_(eig_hermitian(h)) {
    const double floor = 64.0 * kEps * static_cast<double>(dim()) * spectral_radius(eig_.values);
    for (double& lambda : eig_.values) {
        if (lambda >= 0.0) continue;
        if (lambda < -floor) {
            std::ostringstream os;
            os.precision(3);
            os << "matrix is not positive semidefinite (eigenvalue " << lambda << ")";
            fail(ErrorCode::definiteness, os.str());
        }
        lambda = 0.0;
    }
}

HermitianMatrix PsdMatrix::apply(const std::function<double(double)>& f) const {
    std::vector<double> mapped(eig_.values.size());
    std::transform(eig_.values.begin(), eig_.values.end(), mapped.begin(), f);
    return reconstruct(eig_.vectors, mapped);
}

PsdMatrix PsdMatrix::power(double p) const {
    if (!std::isfinite(p)) fail(ErrorCode::domain, "matrix power exponent must be finite");
    std::vector<double> mapped(eig_.values.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        const double lambda = eig_.values[i];
        if (lambda == 0.0) {
            if (p < 0.0) fail(ErrorCode::definiteness, "negative power of a singular matrix");
            mapped[i] = p == 0.0 ? 1.0 : 0.0;
        } else {
            mapped[i] = std::pow(lambda, p);
        }
    }
    HermitianMatrix h = reconstruct(eig_.vectors, mapped);
    return PsdMatrix(std::move(h), sorted(eig_.vectors, mapped));
}

SpdMatrix::SpdMatrix(HermitianMatrix h, EigenDecomposition eig) : PsdMatrix(std::move(h), std::move(eig)) {}

SpdMatrix::SpdMatrix(const HermitianMatrix& h) : PsdMatrix(h) {
    if (!(min_eigenvalue() > 0.0))
        fail(ErrorCode::definiteness, "matrix is not positive definite");
}

SpdMatrix SpdMatrix::power(double p) const {
    if (!std::isfinite(p)) fail(ErrorCode::domain, "matrix power exponent must be finite");
    std::vector<double> mapped(eig_.values.size());
    for (std::size_t i = 0; i < mapped.size(); ++i) mapped[i] = std::pow(eig_.values[i], p);
    if (std::any_of(mapped.begin(), mapped.end(), [](double x) { return !(x > 0.0) || !std::isfinite(x); }))
        fail(ErrorCode::range, "matrix power left the representable range");
    HermitianMatrix h = reconstruct(eig_.vectors, mapped);
    return SpdMatrix(std::move(h), sorted(eig_.vectors, mapped));
}

// Means ------------------------------------------------------------------------------------

HermitianMatrix nabla(const HermitianMatrix& a, const HermitianMatrix& b, double nu) {
    require_same_dim(a.matrix(), b.matrix(), "weighted arithmetic mean");
    return (1.0 - nu) * a + nu * b;
}

SpdMatrix sharp(const SpdMatrix& a, const SpdMatrix& b, double nu) {
    return SpdMatrix(MeanFrame(a, b).sharp(nu));
}

MeanFrame::MeanFrame(const SpdMatrix& a, const SpdMatrix& b) {
    require_same_dim(a.matrix(), b.matrix(), "mean");
    const EigenDecomposition& ea = a.eigen();
    std::vector<double> root(ea.values.size());
    std::vector<double> inv_root(ea.values.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        root[i] = std::sqrt(ea.values[i]);
        inv_root[i] = 1.0 / root[i];
    }
    a_half_ = congruence(ea.vectors, root);
    const Matrix a_inv_half = congruence(ea.vectors, inv_root);
    const HermitianMatrix x = HermitianMatrix::symmetrize(a_inv_half * b.matrix() * a_inv_half);
    x_ = eig_hermitian(x);
    for (double& mu : x_.values)
        if (!(mu > 0.0)) fail(ErrorCode::definiteness, "congruence lost positive definiteness");
    w_ = a_half_ * x_.vectors;
}

HermitianMatrix MeanFrame::transfer(const std::function<double(double)>& f) const {
    std::vector<double> mapped(x_.values.size());
    std::transform(x_.values.begin(), x_.values.end(), mapped.begin(), f);
    for (double v : mapped)
        if (!std::isfinite(v)) fail(ErrorCode::range, "spectral function produced a non-finite value");
    return HermitianMatrix::symmetrize(congruence(w_, mapped));
}

HermitianMatrix MeanFrame::sharp(double nu) const {
    return transfer([nu](double mu) { return std::pow(mu, nu); });
}

// Order --------------------------------------------------------------------------------------

LoewnerVerdict loewner_leq(const HermitianMatrix& lhs, const HermitianMatrix& rhs, double tol_rel) {
    require_same_dim(lhs.matrix(), rhs.matrix(), "Loewner comparison");
    LoewnerVerdict v;
    v.min_eig_of_difference = eig_hermitian(rhs - lhs).values.front();
    const double scale = std::max({1.0, lhs.spectral_norm(), rhs.spectral_norm()});
    v.tolerance_used = tol_rel * scale;
    v.holds = v.min_eig_of_difference >= -v.tolerance_used;
    return v;
}

SpectralBounds::SpectralBounds(double lower, double upper) : m(lower), M(upper) {
    if (!(lower > 0.0) || !(upper >= lower) || !std::isfinite(upper))
        fail(ErrorCode::domain, "spectral bounds need 0 < m <= M < inf");
}

SpectralBounds SpectralBounds::covering(const SpdMatrix& a, const SpdMatrix& b) {
    return {std::min(a.min_eigenvalue(), b.min_eigenvalue()), std::max(a.max_eigenvalue(), b.max_eigenvalue())};
}

void SpectralBounds::certify(const PsdMatrix& x) const {
    constexpr double kSlack = 1e-10;
    if (x.min_eigenvalue() < m * (1.0 - kSlack) || x.max_eigenvalue() > M * (1.0 + kSlack)) {
        std::ostringstream os;
        os.precision(6);
        os << "spectrum [" << x.min_eigenvalue() << ", " << x.max_eigenvalue() << "] not inside [" << m << ", " << M
           << "]";
        fail(ErrorCode::precondition, os.str());
    }
}

}  // namespace yh
