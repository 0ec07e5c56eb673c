#pragma once

#include <functional>
#include <memory>
#include <string>

#include "youngheinz/matrix.hpp"
#include "youngheinz/norms.hpp"
#include "youngheinz/scalar.hpp"

namespace yh {

enum class Provenance { f1, f2, f3, f4, custom };

const char* to_string(Provenance p) noexcept;

/// A positive function on [0, 1], extended by f(t) = 1 for t > 1.
/// Evaluators must be free of side effects.
class LogConvexFunctional {
public:
    /// |||A^t X B^t|||
    static LogConvexFunctional f1(const NormKind& kind, const SpdMatrix& a, const SpdMatrix& b, const Matrix& x);
    /// |||A^t X B^(1-t)|||
    static LogConvexFunctional f2(const NormKind& kind, const SpdMatrix& a, const SpdMatrix& b, const Matrix& x);
    /// |||A^t|||
    static LogConvexFunctional f3(const NormKind& kind, const SpdMatrix& a);
    /// tr(A^t X B^(1-t) X*)
    static LogConvexFunctional f4(const SpdMatrix& a, const SpdMatrix& b, const Matrix& x);
    /// Precondition error unless the midpoint check passes on a 33-point grid.
    static LogConvexFunctional custom(std::function<double(double)> f, std::string name);

    double operator()(double t) const;
    Provenance provenance() const noexcept { return provenance_; }
    const std::string& name() const noexcept { return name_; }

private:
    LogConvexFunctional(Provenance p, std::string name, std::function<double(double)> f)
        : provenance_(p), name_(std::move(name)), f_(std::move(f)) {}

    Provenance provenance_;
    std::string name_;
    std::function<double(double)> f_;
};

inline constexpr int kLogConvexGridPoints = 33;

/// f((s+t)/2)^2 <= f(s) f(t) (1 + 1e-9) over all midpoint pairs of the grid.
bool passes_midpoint_check(const std::function<double(double)>& f);

struct RefinedTriple {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
};

/// K((f(1)/f(0))^(1/2^N))^beta_N(t) f(t) + S_N(t; f(1), f(0)) <= t f(1) + (1-t) f(0),
/// with mid replacing f(t) by f(1)^t f(0)^(1-t).
RefinedTriple logconvex_refined(const LogConvexFunctional& f, const Weight& t, RefinementDepth depth);

/// Item 1..4 of the unitarily invariant norm family: f1, f2, f3 (with A) or f4.
Comparison uin_corollary(const NormKind& kind, const SpdMatrix& a, const SpdMatrix& b, const Matrix& x,
                         const Weight& t, RefinementDepth depth, int item);

struct GridAnchor {
    double x = 0.0;      // floor(2^N nu) / 2^N
    double y = 0.0;      // x + 2^-N
    double alpha = 1.0;  // alpha_N(nu)
    double beta = 0.0;   // beta_N(alpha_N(nu))
    double k = 1.0;      // K((f(x)/f(y))^(1/2^N))^beta
};

GridAnchor grid_anchor(const LogConvexFunctional& f, const Weight& nu, RefinementDepth depth);

/// f(x_N)^alpha f(y_N)^(1-alpha) >= f(nu).
double g_n(const LogConvexFunctional& f, const Weight& nu, RefinementDepth depth);

struct LogConvexChain {
    double v1 = 0.0;
    double v2 = 0.0;
    double v3 = 0.0;
    double v4 = 0.0;
};

LogConvexChain logconvex_chain(const LogConvexFunctional& f, const Weight& nu, RefinementDepth depth);

}  // namespace yh
