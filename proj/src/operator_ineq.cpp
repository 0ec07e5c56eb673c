#include "youngheinz/operator_ineq.hpp"

#include <cmath>

#include "youngheinz/errors.hpp"

namespace yh::op {

namespace {

double sq(double x) { return x * x; }

// x^base + x^(base + 2 step) - 2 x^(base + step), factored so it stays a square.
double block(double x, double base, double step) {
    return std::pow(x, base) * sq(std::expm1(step * std::log(x)));
}

// Sum over levels of s_j(nu) times the young blocks; equals S_N(nu; x, 1).
double young_blocks(double x, const Weight& nu, RefinementDepth depth) {
    double total = 0.0;
    for (int j = 1; j <= depth.n(); ++j) {
        const double s = s_coefficient(j, nu);
        if (s == 0.0) continue;
        const double alpha = std::ldexp(static_cast<double>(k_index(j, nu)), 1 - j);
        total += s * block(x, alpha, std::ldexp(1.0, -j));
    }
    return total;
}

void require_depth(RefinementDepth depth, int min, const char* what) {
    if (depth.n() < min) fail(ErrorCode::depth, std::string(what) + " needs a deeper refinement");
}

}  // namespace

std::vector<ExponentLevel> exponent_schedule(const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("exponent schedule");
    std::vector<ExponentLevel> out;
    const Weight twice = nu.doubled();
    const Weight mirrored = nu.affine(2, -2);
    for (int j = 1; j <= depth.n(); ++j) {
        ExponentLevel l;
        l.j = j;
        l.alpha = std::ldexp(static_cast<double>(k_index(j, nu)), 1 - j);
        l.beta = std::ldexp(static_cast<double>(k_index(j, twice)), -j);
        l.gamma = std::ldexp(static_cast<double>(k_index(j, mirrored)), -j);
        out.push_back(l);
    }
    return out;
}

OperatorComparison young_refined(const MeanFrame& frame, const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("operator young_refined");
    const double v = nu.value();
    return {frame.transfer([&](double x) { return std::pow(x, v) + young_blocks(x, nu, depth); }),
            frame.transfer([&](double x) { return (1.0 - v) + v * x; }), Branch::none};
}

BranchedOperatorComparison reverse_refined(const MeanFrame& frame, const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("operator reverse_refined");
    const double v = nu.value();
    const auto schedule = exponent_schedule(nu, depth);
    BranchedOperatorComparison out;
    if (v <= 0.5) {
        const Weight w = nu.doubled();
        out.push_back({frame.transfer([&](double x) {
                           double total = (1.0 - v) + v * x;
                           for (const auto& l : schedule) {
                               const double s = s_coefficient(l.j, w);
                               if (s == 0.0) continue;
                               const double step = std::ldexp(1.0, -l.j - 1);
                               total += s * block(x, 1.0 - l.beta - 2.0 * step, step);
                           }
                           return total;
                       }),
                       frame.transfer([&](double x) { return std::pow(x, v) + (1.0 - v) * sq(std::sqrt(x) - 1.0); }),
                       Branch::lower});
    }
    if (v >= 0.5) {
        const Weight w = nu.affine(2, -2);
        out.push_back({frame.transfer([&](double x) {
                           double total = (1.0 - v) + v * x;
                           for (const auto& l : schedule) {
                               const double s = s_coefficient(l.j, w);
                               if (s == 0.0) continue;
                               total += s * block(x, l.gamma, std::ldexp(1.0, -l.j - 1));
                           }
                           return total;
                       }),
                       frame.transfer([&](double x) { return std::pow(x, v) + v * sq(std::sqrt(x) - 1.0); }),
                       Branch::upper});
    }
    return out;
}

OperatorComparison minus_reverse(const MeanFrame& frame, const Weight& nu, RefinementDepth depth) {
    const double v = nu.value();
    return {frame.transfer([&](double x) {
                double total = (1.0 + v) - v * x;
                for (int j = 1; j <= depth.n(); ++j)
                    total += std::ldexp(v, j - 1) * block(x, 0.0, std::ldexp(1.0, -j));
                return total;
            }),
            frame.transfer([&](double x) { return std::pow(x, -v); }), Branch::none};
}

MinusViaS minus_reverse_via_s(const SpdMatrix& a, const SpdMatrix& b, const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("operator minus_reverse_via_s");
    const MeanFrame frame(a, b);
    const double v = nu.value();
    MinusViaS out{
        {frame.transfer([&](double x) { return (1.0 + v) - v * x + young_blocks(x, nu, depth); }),
         frame.transfer([&](double x) { return std::pow(x, -v); }), Branch::none},
        {}};

    const HermitianMatrix sum = frame.transfer([&](double x) {
        double total = 0.0;
        for (int j = 1; j <= depth.n(); ++j) {
            const double s = s_coefficient(j, nu);
            if (s == 0.0) continue;
            const double alpha = std::ldexp(static_cast<double>(k_index(j, nu)), 1 - j);
            total += s * block(x, 1.0 + alpha, std::ldexp(1.0, -j));
        }
        return total;
    });
    const Matrix prefactor = a.matrix() * b.inverse().matrix() * a.matrix();
    out.literal.lhs = nabla(a.hermitian(), b.hermitian(), -v).matrix() + prefactor * sum.matrix();
    const double norm = out.literal.lhs.frobenius_norm();
    out.literal.hermiticity_defect = norm > 0.0 ? out.literal.lhs.hermiticity_defect() / norm : 0.0;
    return out;
}

BranchedOperatorComparison squared(const MeanFrame& frame, const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("operator squared");
    require_depth(depth, 2, "operator squared");
    const double v = nu.value();
    const HermitianMatrix lhs = frame.transfer([&](double x) {
        double total = std::pow(x, 2.0 - 2.0 * v);
        for (int j = 2; j <= depth.n(); ++j) {
            const double s = s_coefficient(j, nu);
            if (s == 0.0) continue;
            const double alpha = std::ldexp(static_cast<double>(k_index(j, nu)), 1 - j);
            const double step = std::ldexp(1.0, 1 - j);
            total += s * block(x, 2.0 - 2.0 * alpha - 2.0 * step, step);
        }
        return total;
    });
    BranchedOperatorComparison out;
    if (v <= 0.5)
        out.push_back({lhs, frame.transfer([&](double x) { return (1.0 - 2.0 * v) * x * x + 2.0 * v * x; }),
                       Branch::lower});
    if (v >= 0.5)
        out.push_back({lhs, frame.transfer([&](double x) { return (2.0 * v - 1.0) + (2.0 - 2.0 * v) * x; }),
                       Branch::upper});
    return out;
}

OperatorComparison kanto(const SpdMatrix& a, const SpdMatrix& b, const Weight& nu, RefinementDepth depth,
                         const SpectralBounds& bounds) {
    nu.require_unit_interval("operator kanto");
    bounds.certify(a);
    bounds.certify(b);
    const MeanFrame frame(a, b);
    const double v = nu.value();
    const double h = std::pow(bounds.M / bounds.m, std::ldexp(1.0, -depth.n()));
    const double beta = dyadic_beta(nu, depth);
    const double factor = beta == 0.0 ? 1.0 : std::pow(kantorovich(h), beta);
    return {frame.transfer([&](double x) { return factor * std::pow(x, v) + young_blocks(x, nu, depth); }),
            frame.transfer([&](double x) { return (1.0 - v) + v * x; }), Branch::none};
}

}  // namespace yh::op
