#include "youngheinz/logconvex.hpp"

#include <cmath>
#include <sstream>

#include "youngheinz/errors.hpp"

namespace yh {

namespace {

Matrix spectral_power(const SpdMatrix& m, double t) {
    return m.apply([t](double lambda) { return std::pow(lambda, t); }).matrix();
}

double positive_value(double v, const char* what) {
    if (v == 0.0) fail(ErrorCode::degenerate, std::string(what) + " is zero");
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os.precision(17);
        os << what << " must be positive and finite, got " << v;
        fail(ErrorCode::domain, os.str());
    }
    return v;
}

// K(ratio^(1/2^N))^beta, symmetric in the ratio.
double kanto_power(double ratio, int n, double beta) {
    if (beta == 0.0) return 1.0;
    return std::pow(kantorovich(std::pow(ratio, std::ldexp(1.0, -n))), beta);
}

}  // namespace

const char* to_string(Provenance p) noexcept {
    switch (p) {
        case Provenance::f1: return "f1";
        case Provenance::f2: return "f2";
        case Provenance::f3: return "f3";
        case Provenance::f4: return "f4";
        case Provenance::custom: return "custom";
    }
    return "custom";
}

LogConvexFunctional LogConvexFunctional::f1(const NormKind& kind, const SpdMatrix& a, const SpdMatrix& b,
                                            const Matrix& x) {
    if (a.dim() != x.dim() || b.dim() != x.dim()) fail(ErrorCode::shape, "f1: dimension mismatch");
    return {Provenance::f1, "f1/" + kind.name(),
            [kind, a, b, x](double t) { return norm(spectral_power(a, t) * x * spectral_power(b, t), kind); }};
}

LogConvexFunctional LogConvexFunctional::f2(const NormKind& kind, const SpdMatrix& a, const SpdMatrix& b,
                                            const Matrix& x) {
    if (a.dim() != x.dim() || b.dim() != x.dim()) fail(ErrorCode::shape, "f2: dimension mismatch");
    return {Provenance::f2, "f2/" + kind.name(), [kind, a, b, x](double t) {
                return norm(spectral_power(a, t) * x * spectral_power(b, 1.0 - t), kind);
            }};
}

LogConvexFunctional LogConvexFunctional::f3(const NormKind& kind, const SpdMatrix& a) {
    return {Provenance::f3, "f3/" + kind.name(), [kind, a](double t) { return norm(spectral_power(a, t), kind); }};
}

LogConvexFunctional LogConvexFunctional::f4(const SpdMatrix& a, const SpdMatrix& b, const Matrix& x) {
    if (a.dim() != x.dim() || b.dim() != x.dim()) fail(ErrorCode::shape, "f4: dimension mismatch");
    const Matrix xa = x.adjoint();
    return {Provenance::f4, "f4", [a, b, x, xa](double t) {
                return (spectral_power(a, t) * x * spectral_power(b, 1.0 - t) * xa).trace().real();
            }};
}

LogConvexFunctional LogConvexFunctional::custom(std::function<double(double)> f, std::string name) {
    if (!f) fail(ErrorCode::domain, "custom functional is empty");
    if (!passes_midpoint_check(f))
        fail(ErrorCode::precondition, "functional '" + name + "' failed the log-convexity spot check");
    return {Provenance::custom, std::move(name), std::move(f)};
}

double LogConvexFunctional::operator()(double t) const {
    if (!(t >= 0.0)) fail(ErrorCode::domain, "functional argument must be nonnegative");
    if (t > 1.0) return 1.0;
    return f_(t);
}

bool passes_midpoint_check(const std::function<double(double)>& f) {
    constexpr int last = kLogConvexGridPoints - 1;
    std::vector<double> values(kLogConvexGridPoints);
    for (int i = 0; i <= last; ++i) {
        values[i] = f(static_cast<double>(i) / last);
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) return false;
    }
    for (int i = 0; i <= last; ++i)
        for (int k = i + 2; k <= last; k += 2) {
            const double mid = values[(i + k) / 2];
            if (mid * mid > values[i] * values[k] * (1.0 + 1e-9)) return false;
        }
    return true;
}

RefinedTriple logconvex_refined(const LogConvexFunctional& f, const Weight& t, RefinementDepth depth) {
    t.require_unit_interval("log-convex refinement");
    const double v = t.value();
    const double at0 = positive_value(f(0.0), "f(0)");
    const double at1 = positive_value(f(1.0), "f(1)");
    const double at_t = positive_value(f(v), "f(t)");
    const double k = kanto_power(at1 / at0, depth.n(), dyadic_beta(t, depth));
    const double s = s_n(t, ScalarPair(at1, at0), depth);
    const double geo = mixed_power(at1, v, at0, 1.0 - v);
    return {k * at_t + s, k * geo + s, v * at1 + (1.0 - v) * at0};
}

Comparison uin_corollary(const NormKind& kind, const SpdMatrix& a, const SpdMatrix& b, const Matrix& x,
                         const Weight& t, RefinementDepth depth, int item) {
    auto refined = [&](const LogConvexFunctional& f) {
        const RefinedTriple r = logconvex_refined(f, t, depth);
        return Comparison{r.lhs, r.rhs, Branch::none};
    };
    switch (item) {
        case 1: return refined(LogConvexFunctional::f1(kind, a, b, x));
        case 2: return refined(LogConvexFunctional::f2(kind, a, b, x));
        case 3: return refined(LogConvexFunctional::f3(kind, a));
        case 4: return refined(LogConvexFunctional::f4(a, b, x));
        default: break;
    }
    fail(ErrorCode::domain, "corollary item must be 1..4");
}

GridAnchor grid_anchor(const LogConvexFunctional& f, const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("grid anchor");
    const int n = depth.n();
    const double r = static_cast<double>(nu.scaled(n).whole);
    GridAnchor g;
    g.x = std::ldexp(r, -n);
    g.y = std::ldexp(r + 1.0, -n);
    const Weight alpha = dyadic_alpha(nu, depth);
    g.alpha = alpha.value();
    g.beta = dyadic_beta(alpha, depth);
    const double fx = positive_value(f(g.x), "f(x_N)");
    const double fy = positive_value(f(g.y), "f(y_N)");
    g.k = kanto_power(fx / fy, n, g.beta);
    return g;
}

double g_n(const LogConvexFunctional& f, const Weight& nu, RefinementDepth depth) {
    const GridAnchor g = grid_anchor(f, nu, depth);
    if (g.alpha == 1.0) return f(g.x);
    return mixed_power(f(g.x), g.alpha, f(g.y), 1.0 - g.alpha);
}

LogConvexChain logconvex_chain(const LogConvexFunctional& f, const Weight& nu, RefinementDepth depth) {
    const GridAnchor g = grid_anchor(f, nu, depth);
    const double v = nu.value();
    const double fx = f(g.x), fy = f(g.y);
    const Weight alpha = dyadic_alpha(nu, depth);
    const double s = s_n(alpha, ScalarPair(fx, fy), depth);
    const double geo = g.alpha == 1.0 ? fx : mixed_power(fx, g.alpha, fy, 1.0 - g.alpha);
    LogConvexChain c;
    c.v1 = g.k * positive_value(f(v), "f(nu)") + s;
    c.v2 = g.k * geo + s;
    c.v3 = g.alpha * fx + (1.0 - g.alpha) * fy;
    c.v4 = v * positive_value(f(1.0), "f(1)") + (1.0 - v) * positive_value(f(0.0), "f(0)");
    return c;
}

}  // namespace yh
