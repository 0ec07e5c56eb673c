#include <algorithm>
#include <cmath>

#include "youngheinz/errors.hpp"
#include "youngheinz/hs.hpp"
#include "youngheinz/logconvex.hpp"
#include "youngheinz/operator_ineq.hpp"
#include "youngheinz/registry.hpp"

namespace yh {

namespace {

constexpr double kSpectrumLo = 1e-2;
constexpr double kSpectrumHi = 1e2;

using Sampler = std::function<Json(Rng&, const SampleContext&)>;
using Evaluator = std::function<Outcome(const Json&)>;

std::size_t pick_dim(const SampleContext& ctx) { return ctx.dims[ctx.trial % ctx.dims.size()]; }

Matrix sample_psd(std::size_t n, Rng& rng, bool complex) {
    const Matrix q = random_unitary(n, rng, complex);
    std::vector<double> lambda(n);
    for (double& l : lambda) l = rng.below(4) == 0 ? 0.0 : rng.log_uniform(kSpectrumLo, kSpectrumHi);
    return reconstruct(q, lambda).matrix();
}

NormKind sample_norm(Rng& rng, std::size_t n) {
    static constexpr double kSchattenP[] = {1.5, 3.0, 4.0};
    switch (rng.below(5)) {
        case 0: return NormKind::frobenius();
        case 1: return NormKind::trace();
        case 2: return NormKind::spectral();
        case 3: return NormKind::schatten(kSchattenP[rng.below(3)]);
        default: return NormKind::ky_fan(1 + static_cast<int>(rng.below(n)));
    }
}

// Common instance head: weight and depth.
Json head(Rng& rng, const SampleContext& ctx, const EntryDomain& domain) {
    Json j;
    j["nu"] = encode_weight(sample_weight(rng, ctx, domain));
    j["n"] = sample_depth(rng, ctx, domain);
    return j;
}

Sampler spd_pair_sampler(EntryDomain domain, bool with_bounds = false) {
    return [domain, with_bounds](Rng& rng, const SampleContext& ctx) {
        Json j = head(rng, ctx, domain);
        const std::size_t n = pick_dim(ctx);
        const bool complex = rng.coin();
        const SpdMatrix a = random_spd(n, rng, kSpectrumLo, kSpectrumHi, complex);
        const SpdMatrix b = random_spd(n, rng, kSpectrumLo, kSpectrumHi, complex);
        j["A"] = encode_matrix(a.matrix());
        j["B"] = encode_matrix(b.matrix());
        if (with_bounds) {
            const SpectralBounds bounds = SpectralBounds::covering(a, b);
            j["bounds"] = {bounds.m, bounds.M};
        }
        return j;
    };
}

Sampler triple_sampler(EntryDomain domain, bool psd) {
    return [domain, psd](Rng& rng, const SampleContext& ctx) {
        Json j = head(rng, ctx, domain);
        const std::size_t n = pick_dim(ctx);
        const bool complex = rng.coin();
        if (psd) {
            j["A"] = encode_matrix(sample_psd(n, rng, complex));
            j["B"] = encode_matrix(sample_psd(n, rng, complex));
        } else {
            j["A"] = encode_matrix(random_spd(n, rng, kSpectrumLo, kSpectrumHi, complex).matrix());
            j["B"] = encode_matrix(random_spd(n, rng, kSpectrumLo, kSpectrumHi, complex).matrix());
        }
        j["X"] = encode_matrix(random_matrix(n, rng, complex));
        return j;
    };
}

struct MatrixInstance {
    Weight nu;
    RefinementDepth n;
};

MatrixInstance read_head(const Json& j, const EntryDomain& domain) {
    MatrixInstance in{decode_weight(j), RefinementDepth(j.value("n", 0))};
    in.nu.require_within(domain.nu_lo, domain.nu_hi, "entry domain");
    return in;
}

double loewner_margin(const HermitianMatrix& lhs, const HermitianMatrix& rhs) {
    const LoewnerVerdict v = loewner_leq(lhs, rhs, 1.0);
    return v.min_eig_of_difference / v.tolerance_used;
}

double matrix_identity_margin(const Matrix& x, const Matrix& y) {
    return -(x - y).frobenius_norm() / std::max({1.0, x.frobenius_norm(), y.frobenius_norm()});
}

Outcome operator_outcome(const op::BranchedOperatorComparison& bc, bool branches_agree) {
    Outcome o;
    for (const auto& c : bc) o.checks.push_back({branch_label(c.branch), loewner_margin(c.lhs, c.rhs)});
    if (branches_agree && bc.size() == 2) {
        o.checks.push_back({"branches agree (lhs)", matrix_identity_margin(bc[0].lhs.matrix(), bc[1].lhs.matrix())});
        o.checks.push_back({"branches agree (rhs)", matrix_identity_margin(bc[0].rhs.matrix(), bc[1].rhs.matrix())});
    }
    return o;
}

op::BranchedOperatorComparison keep_branch(op::BranchedOperatorComparison all, Branch keep) {
    op::BranchedOperatorComparison out;
    for (auto& c : all)
        if (c.branch == keep) out.push_back(std::move(c));
    if (out.empty()) fail(ErrorCode::branch, "weight outside the branch");
    return out;
}

Entry matrix_entry(std::string id, std::string location, EntryKind kind, EntryDomain domain, Sampler sample,
                   std::function<Outcome(const Json&, const MatrixInstance&)> eval) {
    Entry e;
    e.id = std::move(id);
    e.location = std::move(location);
    e.kind = kind;
    e.domain = domain;
    e.sample = std::move(sample);
    e.evaluate = [domain, eval = std::move(eval)](const Json& j) { return eval(j, read_head(j, domain)); };
    return e;
}

SpdMatrix spd(const Json& j, const char* key) { return SpdMatrix(decode_matrix(j.at(key))); }

// Log-convex instances ----------------------------------------------------------------

Sampler functional_sampler(EntryDomain domain, int fixed_item) {
    return [domain, fixed_item](Rng& rng, const SampleContext& ctx) {
        Json j = head(rng, ctx, domain);
        const std::size_t n = pick_dim(ctx);
        const bool complex = rng.coin();
        j["functional"] = fixed_item > 0 ? fixed_item : 1 + static_cast<int>(rng.below(4));
        j["norm"] = sample_norm(rng, n).name();
        j["A"] = encode_matrix(random_spd(n, rng, kSpectrumLo, kSpectrumHi, complex).matrix());
        j["B"] = encode_matrix(random_spd(n, rng, kSpectrumLo, kSpectrumHi, complex).matrix());
        j["X"] = encode_matrix(random_matrix(n, rng, complex));
        return j;
    };
}

LogConvexFunctional read_functional(const Json& j) {
    const NormKind kind = NormKind::parse(j.at("norm").get<std::string>());
    const SpdMatrix a = spd(j, "A"), b = spd(j, "B");
    const Matrix x = decode_matrix(j.at("X"));
    switch (j.at("functional").get<int>()) {
        case 1: return LogConvexFunctional::f1(kind, a, b, x);
        case 2: return LogConvexFunctional::f2(kind, a, b, x);
        case 3: return LogConvexFunctional::f3(kind, a);
        case 4: return LogConvexFunctional::f4(a, b, x);
        default: break;
    }
    fail(ErrorCode::usage, "functional must be 1..4");
}

// Hilbert-Schmidt instances -------------------------------------------------------------

hs::Instance read_hs(const Json& j) {
    return hs::Instance(PsdMatrix(decode_matrix(j.at("A"))), PsdMatrix(decode_matrix(j.at("B"))),
                        decode_matrix(j.at("X")));
}

Outcome hs_outcome(const hs::BranchedHsComparison& bc, Branch keep) {
    Outcome o;
    for (const auto& c : bc) {
        if (keep != Branch::none && c.branch != keep) continue;
        o.checks.push_back({branch_label(c.branch), inequality_margin(c.lhs.direct, c.rhs.direct)});
        o.checks.push_back({"route agreement", -c.route_gap()});
    }
    if (o.checks.empty()) fail(ErrorCode::branch, "weight outside the branch");
    return o;
}

constexpr EntryDomain kUnit{0.0, 1.0, 0, RefinementDepth::kMax};
constexpr EntryDomain kLowerHalf{0.0, 0.5, 0, RefinementDepth::kMax};
constexpr EntryDomain kUpperHalf{0.5, 1.0, 0, RefinementDepth::kMax};

EntryDomain from_depth(EntryDomain d, int min) {
    d.depth_min = min;
    return d;
}

}  // namespace

void add_matrix_entries(std::vector<Entry>& out) {
    const auto loewner = EntryKind::loewner;

    out.push_back(matrix_entry("op.young.refined", "operator multi-term Young refinement", loewner, kUnit,
                               spd_pair_sampler(kUnit), [](const Json& j, const MatrixInstance& in) {
                                   const MeanFrame frame(spd(j, "A"), spd(j, "B"));
                                   return operator_outcome({op::young_refined(frame, in.nu, in.n)}, false);
                               }));
    out.push_back(matrix_entry("op.reverse.lo", "operator refined reverse, nu <= 1/2", loewner, kLowerHalf,
                               spd_pair_sampler(kLowerHalf), [](const Json& j, const MatrixInstance& in) {
                                   const MeanFrame frame(spd(j, "A"), spd(j, "B"));
                                   return operator_outcome(op::reverse_refined(frame, in.nu, in.n), true);
                               }));
    out.push_back(matrix_entry("op.reverse.hi", "operator refined reverse, nu >= 1/2", loewner, kUpperHalf,
                               spd_pair_sampler(kUpperHalf), [](const Json& j, const MatrixInstance& in) {
                                   const MeanFrame frame(spd(j, "A"), spd(j, "B"));
                                   return operator_outcome(keep_branch(op::reverse_refined(frame, in.nu, in.n),
                                                                       Branch::upper),
                                                           false);
                               }));
    const EntryDomain unbounded{0.0, 3.0, 0, RefinementDepth::kMax};
    out.push_back(matrix_entry("op.minus.reverse", "operator minus-reverse with extended means, nu >= 0", loewner,
                               unbounded, spd_pair_sampler(unbounded), [](const Json& j, const MatrixInstance& in) {
                                   const MeanFrame frame(spd(j, "A"), spd(j, "B"));
                                   return operator_outcome({op::minus_reverse(frame, in.nu, in.n)}, false);
                               }));
    out.push_back(matrix_entry("op.minus.via_s", "operator minus-reverse through S_N, transferred form", loewner, kUnit,
                               spd_pair_sampler(kUnit), [](const Json& j, const MatrixInstance& in) {
                                   const auto r = op::minus_reverse_via_s(spd(j, "A"), spd(j, "B"), in.nu, in.n);
                                   return operator_outcome({r.transferred}, false);
                               }));
    {
        Entry e = matrix_entry("op.minus.literal", "operator minus-reverse through S_N, literal A B^-1 A form",
                               loewner, kUnit, spd_pair_sampler(kUnit), [](const Json& j, const MatrixInstance& in) {
                                   const auto r = op::minus_reverse_via_s(spd(j, "A"), spd(j, "B"), in.nu, in.n);
                                   Outcome o;
                                   o.defect = r.literal.hermiticity_defect;
                                   return o;
                               });
        e.diagnostic = true;
        out.push_back(std::move(e));
    }
    out.push_back(matrix_entry("op.squared.lo", "operator squared refinement, nu <= 1/2", loewner,
                               from_depth(kLowerHalf, 2), spd_pair_sampler(from_depth(kLowerHalf, 2)),
                               [](const Json& j, const MatrixInstance& in) {
                                   const MeanFrame frame(spd(j, "A"), spd(j, "B"));
                                   return operator_outcome(op::squared(frame, in.nu, in.n), false);
                               }));
    out.push_back(matrix_entry("op.squared.hi", "operator squared refinement, nu >= 1/2", loewner,
                               from_depth(kUpperHalf, 2), spd_pair_sampler(from_depth(kUpperHalf, 2)),
                               [](const Json& j, const MatrixInstance& in) {
                                   const MeanFrame frame(spd(j, "A"), spd(j, "B"));
                                   return operator_outcome(keep_branch(op::squared(frame, in.nu, in.n), Branch::upper),
                                                           false);
                               }));
    out.push_back(matrix_entry("op.kanto", "operator Kantorovich refinement under mI <= A, B <= MI", loewner, kUnit,
                               spd_pair_sampler(kUnit, true), [](const Json& j, const MatrixInstance& in) {
                                   const Json& bounds = j.at("bounds");
                                   const SpectralBounds sb(bounds.at(0).get<double>(), bounds.at(1).get<double>());
                                   return operator_outcome({op::kanto(spd(j, "A"), spd(j, "B"), in.nu, in.n, sb)},
                                                           false);
                               }));

    // Log-convex functionals
    const auto lc = EntryKind::log_convex;
    out.push_back(matrix_entry("lc.proposition", "Kantorovich refinement for log-convex functions on [0, 1]", lc,
                               kUnit, functional_sampler(kUnit, 0), [](const Json& j, const MatrixInstance& in) {
                                   const RefinedTriple t = logconvex_refined(read_functional(j), in.nu, in.n);
                                   Outcome o;
                                   o.checks.push_back({"lhs <= mid", inequality_margin(t.lhs, t.mid)});
                                   o.checks.push_back({"mid <= rhs", inequality_margin(t.mid, t.rhs)});
                                   return o;
                               }));
    static const char* const kItems[] = {
        "unitarily invariant norm refinement for |||A^t X B^t|||",
        "unitarily invariant norm refinement for |||A^t X B^(1-t)|||",
        "unitarily invariant norm refinement for |||A^t|||",
        "refinement for tr(A^t X B^(1-t) X*)",
    };
    for (int item = 1; item <= 4; ++item) {
        out.push_back(matrix_entry("lc.uin.item" + std::to_string(item), kItems[item - 1], lc, kUnit,
                                   functional_sampler(kUnit, item), [item](const Json& j, const MatrixInstance& in) {
                                       const NormKind kind = NormKind::parse(j.at("norm").get<std::string>());
                                       const Comparison c = uin_corollary(kind, spd(j, "A"), spd(j, "B"),
                                                                          decode_matrix(j.at("X")), in.nu, in.n, item);
                                       Outcome o;
                                       o.checks.push_back({"inequality", inequality_margin(c.lhs, c.rhs)});
                                       return o;
                                   }));
    }
    const EntryDomain from_one = from_depth(kUnit, 1);
    out.push_back(matrix_entry("lc.gn.monotone", "dyadic log-convex interpolants decrease in N and dominate f",
                               lc, from_one, functional_sampler(from_one, 0),
                               [](const Json& j, const MatrixInstance& in) {
                                   const LogConvexFunctional f = read_functional(j);
                                   const double g = g_n(f, in.nu, in.n);
                                   const double next = g_n(f, in.nu, RefinementDepth(in.n.n() + 1));
                                   Outcome o;
                                   o.checks.push_back({"g_(N+1) <= g_N", inequality_margin(next, g)});
                                   o.checks.push_back({"f <= g_N", inequality_margin(f(in.nu.value()), g)});
                                   return o;
                               }));
    out.push_back(matrix_entry("lc.chain", "four-step chain for log-convex functions", lc, from_one,
                               functional_sampler(from_one, 0), [](const Json& j, const MatrixInstance& in) {
                                   const LogConvexChain c = logconvex_chain(read_functional(j), in.nu, in.n);
                                   Outcome o;
                                   o.checks.push_back({"v1 <= v2", inequality_margin(c.v1, c.v2)});
                                   o.checks.push_back({"v2 <= v3", inequality_margin(c.v2, c.v3)});
                                   o.checks.push_back({"v3 <= v4", inequality_margin(c.v3, c.v4)});
                                   return o;
                               }));

    // Hilbert-Schmidt norm theorems
    const auto hsk = EntryKind::hilbert_schmidt;
    const EntryDomain unit2 = from_depth(kUnit, 2);
    out.push_back(matrix_entry("hs.squared.refined", "Hilbert-Schmidt squared refinement", hsk, unit2,
                               triple_sampler(unit2, true), [](const Json& j, const MatrixInstance& in) {
                                   return hs_outcome({hs::squared_refined(read_hs(j), in.nu, in.n)}, Branch::none);
                               }));
    out.push_back(matrix_entry("hs.squared.reverse.lo", "Hilbert-Schmidt squared reverse, nu <= 1/2", hsk, kLowerHalf,
                               triple_sampler(kLowerHalf, true), [](const Json& j, const MatrixInstance& in) {
                                   return hs_outcome(hs::squared_reverse(read_hs(j), in.nu, in.n), Branch::lower);
                               }));
    out.push_back(matrix_entry("hs.squared.reverse.hi", "Hilbert-Schmidt squared reverse, nu >= 1/2", hsk, kUpperHalf,
                               triple_sampler(kUpperHalf, true), [](const Json& j, const MatrixInstance& in) {
                                   return hs_outcome(hs::squared_reverse(read_hs(j), in.nu, in.n), Branch::upper);
                               }));
    out.push_back(matrix_entry("hs.heinz.refined.lo", "Hilbert-Schmidt Heinz refinement, nu <= 1/2", hsk, kLowerHalf,
                               triple_sampler(kLowerHalf, true), [](const Json& j, const MatrixInstance& in) {
                                   return hs_outcome(hs::heinz_refined(read_hs(j), in.nu, in.n), Branch::lower);
                               }));
    out.push_back(matrix_entry("hs.heinz.refined.hi", "Hilbert-Schmidt Heinz refinement, nu >= 1/2", hsk, kUpperHalf,
                               triple_sampler(kUpperHalf, true), [](const Json& j, const MatrixInstance& in) {
                                   return hs_outcome(hs::heinz_refined(read_hs(j), in.nu, in.n), Branch::upper);
                               }));
    const EntryDomain quarter{0.0, 0.25, 2, RefinementDepth::kMax};
    out.push_back(matrix_entry("hs.heinz.rev", "Hilbert-Schmidt Heinz reverse, nu in [0, 1/4]", hsk, quarter,
                               triple_sampler(quarter, true), [](const Json& j, const MatrixInstance& in) {
                                   return hs_outcome({hs::heinz_reverse(read_hs(j), in.nu, in.n)}, Branch::none);
                               }));
}

}  // namespace yh
