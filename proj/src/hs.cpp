#include "youngheinz/hs.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "youngheinz/errors.hpp"

namespace yh::hs {

namespace {

// Eigenvalue power with 0^0 = 1 and 0^p = 0 for p > 0.
double power_of(double lambda, double p) {
    if (p == 0.0) return 1.0;
    if (lambda == 0.0) return 0.0;
    return std::pow(lambda, p);
}

void require_depth(RefinementDepth depth, int min, const char* what) {
    if (depth.n() < min) fail(ErrorCode::depth, std::string(what) + " needs depth >= " + std::to_string(min));
}

WeightedNorm single(double weight, PowerTerm t) { return {weight, {t}}; }

// ||A^p1 X B^q1 - A^p2 X B^q2||^2 with the given weight.
WeightedNorm difference(double weight, double p1, double q1, double p2, double q2) {
    return {weight, {{1.0, p1, q1}, {-1.0, p2, q2}}};
}

// ||AX - XB||^2
WeightedNorm commutator(double weight) { return difference(weight, 1.0, 0.0, 0.0, 1.0); }

double level_exponent(const Weight& w, int j, int shift) {
    return std::ldexp(static_cast<double>(k_index(j, w)), shift);
}

// Heinz mean term ||A^nu X B^(1-nu) + A^(1-nu) X B^nu||^2.
WeightedNorm heinz_term(double v) { return {1.0, {{1.0, v, 1.0 - v}, {1.0, 1.0 - v, v}}}; }

double relative_gap(const Evaluation& e) {
    return std::fabs(e.direct - e.eigenbasis) / std::max({1.0, std::fabs(e.direct), std::fabs(e.eigenbasis)});
}

}  // namespace

Instance::Instance(PsdMatrix a, PsdMatrix b, Matrix x) : a_(std::move(a)), b_(std::move(b)), x_(std::move(x)) {
    if (a_.dim() != x_.dim() || b_.dim() != x_.dim()) fail(ErrorCode::shape, "Hilbert-Schmidt instance: dimension mismatch");
    basis_.u = a_.eigen().vectors;
    basis_.v = b_.eigen().vectors;
    basis_.lambda = a_.eigen().values;
    basis_.mu = b_.eigen().values;
    basis_.y = basis_.u.adjoint() * x_ * basis_.v;
}

double Instance::direct(const Expression& e) const {
    std::map<double, Matrix> a_powers, b_powers;
    auto a_pow = [&](double p) -> const Matrix& {
        auto it = a_powers.find(p);
        if (it == a_powers.end()) it = a_powers.emplace(p, a_.power(p).matrix()).first;
        return it->second;
    };
    auto b_pow = [&](double q) -> const Matrix& {
        auto it = b_powers.find(q);
        if (it == b_powers.end()) it = b_powers.emplace(q, b_.power(q).matrix()).first;
        return it->second;
    };
    double total = 0.0;
    for (const WeightedNorm& w : e) {
        if (w.weight == 0.0) continue;
        Matrix sum(dim());
        for (const PowerTerm& t : w.terms) sum += (a_pow(t.p) * x_ * b_pow(t.q)) * Complex(t.coeff);
        const double f = sum.frobenius_norm();
        total += w.weight * f * f;
    }
    return total;
}

double Instance::via_eigenbasis(const Expression& e) const {
    const std::size_t n = dim();
    double total = 0.0;
    for (const WeightedNorm& w : e) {
        if (w.weight == 0.0) continue;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                double c = 0.0;
                for (const PowerTerm& t : w.terms)
                    c += t.coeff * power_of(basis_.lambda[i], t.p) * power_of(basis_.mu[j], t.q);
                sum += c * c * std::norm(basis_.y(i, j));
            }
        total += w.weight * sum;
    }
    return total;
}

double HsComparison::route_gap() const { return std::max(relative_gap(lhs), relative_gap(rhs)); }

std::vector<Statement> squared_refined_terms(const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("hs squared_refined");
    require_depth(depth, 2, "hs squared_refined");
    const double v = nu.value();
    const double s1 = s_coefficient(1, nu);
    Statement st;
    st.lhs.push_back(single(1.0, {1.0, v, 1.0 - v}));
    st.lhs.push_back(commutator(s1 * s1));
    for (int j = 2; j <= depth.n(); ++j) {
        const double alpha = level_exponent(nu, j, 1 - j);
        const double step = std::ldexp(1.0, 1 - j);
        st.lhs.push_back(difference(s_coefficient(j, nu), alpha, 1.0 - alpha, alpha + step, 1.0 - alpha - step));
    }
    st.rhs.push_back({1.0, {{v, 1.0, 0.0}, {1.0 - v, 0.0, 1.0}}});
    return {st};
}

std::vector<Statement> squared_reverse_terms(const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("hs squared_reverse");
    const double v = nu.value();
    const Expression arithmetic{{1.0, {{v, 1.0, 0.0}, {1.0 - v, 0.0, 1.0}}}};
    const WeightedNorm geometric = single(1.0, {1.0, v, 1.0 - v});
    std::vector<Statement> out;
    if (v <= 0.5) {
        const Weight w = nu.doubled();
        Statement st{arithmetic, {geometric, commutator((1.0 - v) * (1.0 - v))}, Branch::lower};
        for (int j = 1; j <= depth.n(); ++j) {
            const double beta = level_exponent(w, j, -j);
            const double step = std::ldexp(1.0, -j);
            st.lhs.push_back(difference(s_coefficient(j, w), 1.0 - beta, beta, 1.0 - beta - step, beta + step));
        }
        out.push_back(std::move(st));
    }
    if (v >= 0.5) {
        const Weight w = nu.affine(2, -2);
        Statement st{arithmetic, {geometric, commutator(v * v)}, Branch::upper};
        for (int j = 1; j <= depth.n(); ++j) {
            const double gamma = level_exponent(w, j, -j);
            const double step = std::ldexp(1.0, -j);
            st.lhs.push_back(difference(s_coefficient(j, w), gamma, 1.0 - gamma, gamma + step, 1.0 - gamma - step));
        }
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<Statement> heinz_refined_terms(const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("hs heinz_refined");
    const double v = nu.value();
    const Expression rhs{{1.0, {{1.0, 1.0, 0.0}, {1.0, 0.0, 1.0}}}};
    auto build = [&](const Weight& w, double coefficient, Branch branch) {
        Statement st{{heinz_term(v), commutator(coefficient)}, rhs, branch};
        for (int j = 1; j <= depth.n(); ++j) {
            const double s = s_coefficient(j, w);
            const double beta = level_exponent(w, j, -j);
            const double step = std::ldexp(1.0, -j);
            // S_N(w; ab, a^2) and S_N(w; ab, b^2) under the Hilbert-Schmidt transfer
            st.lhs.push_back(difference(s, 1.0 - beta, beta, 1.0 - beta - step, beta + step));
            st.lhs.push_back(difference(s, beta, 1.0 - beta, beta + step, 1.0 - beta - step));
        }
        return st;
    };
    std::vector<Statement> out;
    if (v <= 0.5) out.push_back(build(nu.doubled(), 2.0 * v, Branch::lower));
    if (v >= 0.5) out.push_back(build(nu.affine(2, -2), 2.0 * (1.0 - v), Branch::upper));
    return out;
}

std::vector<Statement> heinz_reverse_terms(const Weight& nu, RefinementDepth depth) {
    nu.require_unit_interval("hs heinz_reverse");
    if (nu.value() > 0.25) fail(ErrorCode::branch, "hs heinz_reverse is stated for nu in [0, 1/4]");
    require_depth(depth, 2, "hs heinz_reverse");
    const double v = nu.value();
    const Weight w = nu.affine(0, 4);
    Statement st;
    st.branch = Branch::first;
    st.lhs.push_back({1.0, {{1.0, 1.0, 0.0}, {1.0, 0.0, 1.0}}});
    for (int j = 2; j <= depth.n(); ++j) {
        const double s = s_coefficient(j, w);
        const double e = level_exponent(w, j, -j - 1);
        const double step = std::ldexp(1.0, -j - 1);
        st.lhs.push_back(difference(s, 0.5 + e, 0.5 - e, 0.5 + e + step, 0.5 - e - step));
        st.lhs.push_back(difference(s, 0.5 - e, 0.5 + e, 0.5 - e - step, 0.5 + e + step));
    }
    st.rhs.push_back(heinz_term(v));
    st.rhs.push_back(commutator(2.0 * v));
    st.rhs.push_back(difference(1.0 - 2.0 * v, 0.5, 0.5, 1.0, 0.0));
    st.rhs.push_back(difference(1.0 - 2.0 * v, 0.5, 0.5, 0.0, 1.0));
    return {st};
}

BranchedHsComparison evaluate(const Instance& inst, const std::vector<Statement>& statements) {
    BranchedHsComparison out;
    for (const Statement& st : statements)
        out.push_back({{inst.direct(st.lhs), inst.via_eigenbasis(st.lhs)},
                       {inst.direct(st.rhs), inst.via_eigenbasis(st.rhs)},
                       st.branch});
    return out;
}

HsComparison squared_refined(const Instance& inst, const Weight& nu, RefinementDepth depth) {
    return evaluate(inst, squared_refined_terms(nu, depth)).front();
}

BranchedHsComparison squared_reverse(const Instance& inst, const Weight& nu, RefinementDepth depth) {
    return evaluate(inst, squared_reverse_terms(nu, depth));
}

BranchedHsComparison heinz_refined(const Instance& inst, const Weight& nu, RefinementDepth depth) {
    return evaluate(inst, heinz_refined_terms(nu, depth));
}

HsComparison heinz_reverse(const Instance& inst, const Weight& nu, RefinementDepth depth) {
    return evaluate(inst, heinz_reverse_terms(nu, depth)).front();
}

}  // namespace yh::hs
