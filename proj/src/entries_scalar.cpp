#include <algorithm>
#include <cmath>

#include "youngheinz/errors.hpp"
#include "youngheinz/registry.hpp"

namespace yh {

namespace {

constexpr double kScalarLo = 1e-3;
constexpr double kScalarHi = 1e3;

double sq(double x) { return x * x; }

struct ScalarInstance {
    Weight nu;
    ScalarPair pair;
    RefinementDepth n;
    RefinementDepth m;
};

ScalarInstance read_scalar(const Json& j) {
    return {decode_weight(j), ScalarPair(j.at("a").get<double>(), j.at("b").get<double>()),
            RefinementDepth(j.value("n", 0)), RefinementDepth(j.value("m", 0))};
}

using CheckFn = std::function<std::vector<Check>(const ScalarInstance&)>;

std::function<Json(Rng&, const SampleContext&)> scalar_sampler(EntryDomain domain, bool second_depth) {
    return [domain, second_depth](Rng& rng, const SampleContext& ctx) {
        Json j;
        j["nu"] = encode_weight(sample_weight(rng, ctx, domain));
        j["a"] = rng.log_uniform(kScalarLo, kScalarHi);
        j["b"] = rng.log_uniform(kScalarLo, kScalarHi);
        j["n"] = sample_depth(rng, ctx, domain);
        if (second_depth) j["m"] = sample_depth(rng, ctx, EntryDomain{});
        return j;
    };
}

std::vector<Check> branch_checks(const BranchedComparison& bc, bool branches_agree) {
    std::vector<Check> out;
    for (const Comparison& c : bc) out.push_back({branch_label(c.branch), inequality_margin(c.lhs, c.rhs)});
    if (branches_agree && bc.size() == 2) {
        out.push_back({"branches agree (lhs)", identity_margin(bc[0].lhs, bc[1].lhs)});
        out.push_back({"branches agree (rhs)", identity_margin(bc[0].rhs, bc[1].rhs)});
    }
    return out;
}

struct ScalarSpec {
    std::string id;
    std::string location;
    EntryDomain domain;
    ScalarCompare compare{};
    bool branches_agree = false;
    CheckFn extra{};
    bool second_depth = false;
};

Entry make_entry(ScalarSpec spec) {
    Entry e;
    e.id = std::move(spec.id);
    e.location = std::move(spec.location);
    e.kind = EntryKind::scalar;
    e.domain = spec.domain;
    e.sample = scalar_sampler(spec.domain, spec.second_depth);
    e.compare = spec.compare;
    const EntryDomain domain = spec.domain;
    e.evaluate = [compare = spec.compare, agree = spec.branches_agree, extra = spec.extra, domain](const Json& j) {
        const ScalarInstance in = read_scalar(j);
        in.nu.require_within(domain.nu_lo, domain.nu_hi, "entry domain");
        Outcome o;
        if (compare) o.checks = branch_checks(compare(in.nu, in.pair, in.n), agree);
        if (extra)
            for (Check& c : extra(in)) o.checks.push_back(std::move(c));
        return o;
    };
    return e;
}

ScalarCompare single(Comparison (*f)(const Weight&, const ScalarPair&, RefinementDepth)) {
    return [f](const Weight& nu, const ScalarPair& p, RefinementDepth n) { return BranchedComparison{f(nu, p, n)}; };
}

ScalarCompare only(BranchedComparison (*f)(const Weight&, const ScalarPair&, RefinementDepth), Branch keep) {
    return [f, keep](const Weight& nu, const ScalarPair& p, RefinementDepth n) {
        BranchedComparison out;
        for (const Comparison& c : f(nu, p, n))
            if (c.branch == keep) out.push_back(c);
        if (out.empty()) fail(ErrorCode::branch, std::string("weight outside the ") + to_string(keep) + " branch");
        return out;
    };
}

double geo(const Weight& nu, const ScalarPair& p) {
    return mixed_power(p.a(), nu.value(), p.b(), 1.0 - nu.value());
}

double arith(const Weight& nu, const ScalarPair& p) {
    return nu.value() * p.a() + (1.0 - nu.value()) * p.b();
}

double root_gap(const ScalarPair& p) { return sq(std::sqrt(p.a()) - std::sqrt(p.b())); }

ScalarCompare baseline(std::function<Comparison(const Weight&, const ScalarPair&, const BaselineTerms&)> f) {
    return [f](const Weight& nu, const ScalarPair& p, RefinementDepth) {
        const BaselineTerms t = nu.value() <= 1.0 ? baseline_terms(nu, p) : BaselineTerms{};
        return BranchedComparison{f(nu, p, t)};
    };
}

constexpr EntryDomain kUnit{0.0, 1.0, 0, RefinementDepth::kMax};
constexpr EntryDomain kUnbounded{0.0, 3.0, 0, RefinementDepth::kMax};
constexpr EntryDomain kLowerHalf{0.0, 0.5, 0, RefinementDepth::kMax};
constexpr EntryDomain kUpperHalf{0.5, 1.0, 0, RefinementDepth::kMax};

EntryDomain with_depth(EntryDomain d, int min, int cap = RefinementDepth::kMax) {
    d.depth_min = min;
    d.depth_cap = cap;
    return d;
}

}  // namespace

void add_scalar_entries(std::vector<Entry>& out) {
    auto add = [&](ScalarSpec s) { out.push_back(make_entry(std::move(s))); };

    // Young type refinements
    add({"scalar.young.refined", "multi-term refinement of the weighted AM-GM inequality", kUnit,
         single(young_refined)});
    add({"scalar.telescoping", "refinement sum plus dyadic remainder equals the arithmetic mean", kUnit, nullptr, false,
         [](const ScalarInstance& in) {
             const double arithmetic = arith(in.nu, in.pair);
             return std::vector<Check>{{"identity", identity_margin(arithmetic - s_n(in.nu, in.pair, in.n),
                                                                    r_n(in.nu, in.pair, in.n))}};
         }});
    add({"scalar.symmetry", "refinement sum and remainder are symmetric under (nu, a, b) -> (1-nu, b, a)", kUnit,
         nullptr, false, [](const ScalarInstance& in) {
             const Weight mirror = in.nu.complement();
             const ScalarPair swapped = in.pair.swapped();
             return std::vector<Check>{
                 {"S_N", identity_margin(s_n(in.nu, in.pair, in.n), s_n(mirror, swapped, in.n))},
                 {"R_N", identity_margin(r_n(in.nu, in.pair, in.n), r_n(mirror, swapped, in.n))}};
         }});
    add({"scalar.heinz", "Heinz mean lies between the geometric and arithmetic means", kUnit, nullptr, false,
         [](const ScalarInstance& in) {
             const HeinzBounds h = heinz_scalar_bounds(in.nu, in.pair);
             return std::vector<Check>{{"lower", inequality_margin(h.lower, h.mid)},
                                       {"upper", inequality_margin(h.mid, h.upper)}};
         }});

    // Reverses
    add({"scalar.reverse.lo", "multi-term refined reverse Young inequality, nu <= 1/2", kLowerHalf,
         only(reverse_refined, Branch::lower), true});
    add({"scalar.reverse.hi", "multi-term refined reverse Young inequality, nu >= 1/2", kUpperHalf,
         only(reverse_refined, Branch::upper), true});
    add({"scalar.reverse.s1", "one-level reverse refinement equals the two-term reverse refining term", kLowerHalf,
         nullptr, false, [](const ScalarInstance& in) {
             const double a = in.pair.a(), b = in.pair.b(), v = in.nu.value();
             const double root = std::sqrt(a) * std::sqrt(b);
             const double term = s_n(in.nu.doubled(), ScalarPair(root, a), RefinementDepth(1));
             const double expected = std::min(2.0 * v, 1.0 - 2.0 * v) * sq(std::sqrt(root) - std::sqrt(a));
             return std::vector<Check>{{"identity", identity_margin(term, expected)}};
         }});
    add({"scalar.minus.inductive", "multi-term refinement of (1+nu)a - nu b <= a^(1+nu) b^(-nu), nu >= 0",
         kUnbounded, single(minus_reverse_inductive)});
    add({"scalar.minus.identity", "closed form of the inductive minus-reverse sum", with_depth(kUnbounded, 0, 10),
         nullptr, false, [](const ScalarInstance& in) {
             return std::vector<Check>{{"identity", identity_margin(minus_reverse_inductive(in.nu, in.pair, in.n).lhs,
                                                                    minus_reverse_closed_form(in.nu, in.pair, in.n))}};
         }});
    add({"scalar.minus.via_s", "minus-reverse refinement through S_N(1-nu; ab, b^2)", kUnit,
         single(minus_reverse_via_s)});
    add({"scalar.minus.via_s2", "minus-reverse refinement through S_N(1/(1+nu); a^(1+nu) b^(-nu), b)", kUnbounded,
         single(minus_reverse_via_s2)});

    // Squared versions
    add({"scalar.squared.refined", "multi-term squared Young refinement", with_depth(kUnit, 2),
         single(squared_refined), false, [](const ScalarInstance& in) {
             const double scale = std::max({1.0, sq(in.pair.a()), sq(in.pair.b())});
             return std::vector<Check>{
                 {"cancellation identity", -std::fabs(squared_identity_residual(in.nu, in.pair)) / scale}};
         }});
    add({"scalar.squared.reverse.lo", "multi-term squared reverse, nu <= 1/2", kLowerHalf,
         only(squared_reverse, Branch::lower), true});
    add({"scalar.squared.reverse.hi", "multi-term squared reverse, nu >= 1/2", kUpperHalf,
         only(squared_reverse, Branch::upper), true});

    // Double refinements
    auto double_compare = [](DoubleRefinement (*f)(const Weight&, const ScalarPair&, RefinementDepth, RefinementDepth)) {
        return [f](const ScalarInstance& in) {
            const DoubleRefinement d = f(in.nu, in.pair, in.n, in.m);
            return std::vector<Check>{{"inequality", inequality_margin(d.comparison.lhs, d.comparison.rhs)}};
        };
    };
    add({"scalar.double.refined", "double refinement with a second sum on the dyadic anchors", kUnit, nullptr, false,
         [double_compare](const ScalarInstance& in) {
             auto checks = double_compare(double_refinement)(in);
             const DyadicAnchor an = dyadic_anchor(in.nu, in.pair, in.n);
             const double recombined = an.alpha == 1.0 ? an.x : mixed_power(an.x, an.alpha, an.y, 1.0 - an.alpha);
             checks.push_back({"anchor identity", identity_margin(recombined, geo(in.nu, in.pair))});
             return checks;
         },
         true});
    add({"scalar.double.squared", "squared double refinement", with_depth(kUnit, 1), nullptr, false,
         double_compare(double_squared), true});
    auto double_reverse_branch = [](Branch keep) {
        return [keep](const ScalarInstance& in) {
            BranchedComparison kept;
            for (const Comparison& c : double_reverse(in.nu, in.pair, in.n, in.m))
                if (c.branch == keep) kept.push_back(c);
            if (kept.empty()) fail(ErrorCode::branch, "weight outside the branch");
            return branch_checks(kept, false);
        };
    };
    add({"scalar.double.reverse.lo", "double refined reverse, nu <= 1/2", kLowerHalf, nullptr, false,
         double_reverse_branch(Branch::lower), true});
    add({"scalar.double.reverse.hi", "double refined reverse, nu >= 1/2", kUpperHalf, nullptr, false,
         double_reverse_branch(Branch::upper), true});

    // Kantorovich strengthenings
    add({"scalar.kanto.young_refined", "Kantorovich factor on the geometric mean plus S_N", kUnit,
         single(kanto_young_refined)});
    add({"scalar.kanto.square_sab.lo", "Kantorovich squared refinement with (1-2nu)^(2nu) prefactor, nu <= 1/2",
         kLowerHalf, only(kanto_square_sab, Branch::lower), true});
    add({"scalar.kanto.square_sab.hi", "Kantorovich squared refinement with (2nu-1)^(2-2nu) prefactor, nu >= 1/2",
         kUpperHalf, only(kanto_square_sab, Branch::upper), true});
    add({"scalar.kanto.nu_square.lo", "Kantorovich refinement of nu^2 a + (1-nu)^2 b, nu <= 1/2", kLowerHalf,
         only(kanto_nu_square, Branch::lower)});
    add({"scalar.kanto.nu_square.hi", "Kantorovich refinement of nu^2 a + (1-nu)^2 b, nu >= 1/2", kUpperHalf,
         only(kanto_nu_square, Branch::upper)});

    // Heinz lemmas
    add({"scalar.heinz.refined.lo", "squared Heinz mean refinement, nu <= 1/2", kLowerHalf,
         only(heinz_refined_scalar, Branch::lower), true});
    add({"scalar.heinz.refined.hi", "squared Heinz mean refinement, nu >= 1/2", kUpperHalf,
         only(heinz_refined_scalar, Branch::upper), true});
    add({"scalar.heinz.reverse.b1", "squared Heinz mean reverse, nu in [0, 1/4]", {0.0, 0.25, 0, RefinementDepth::kMax},
         only(heinz_reverse_scalar, Branch::first)});
    add({"scalar.heinz.reverse.b2", "squared Heinz mean reverse, nu in [1/4, 1/2]",
         {0.25, 0.5, 0, RefinementDepth::kMax}, only(heinz_reverse_scalar, Branch::second)});
    add({"scalar.heinz.reverse.b3", "squared Heinz mean reverse, nu in [1/2, 3/4]",
         {0.5, 0.75, 0, RefinementDepth::kMax}, only(heinz_reverse_scalar, Branch::third)});
    add({"scalar.heinz.reverse.b4", "squared Heinz mean reverse, nu in [3/4, 1]", {0.75, 1.0, 0, RefinementDepth::kMax},
         only(heinz_reverse_scalar, Branch::fourth)});

    // One and two term baselines
    add({"base.squared", "one-term squared refinement with min(nu,1-nu)^2 (a-b)^2", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             return Comparison{sq(geo(nu, p)) + t.squared, sq(arith(nu, p)), Branch::none};
         })});
    add({"base.kittaneh", "one-term refinement with min(nu,1-nu)(sqrt a - sqrt b)^2", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             return Comparison{geo(nu, p) + t.kittaneh, arith(nu, p), Branch::none};
         })});
    add({"base.zhao", "two-term refinement with r0 fourth-root term", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             return Comparison{geo(nu, p) + t.zhao, arith(nu, p), Branch::none};
         })});
    add({"base.zhao_reverse", "two-term reverse with r0 fourth-root term", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             const double big = std::max(nu.value(), 1.0 - nu.value());
             return Comparison{arith(nu, p) + t.zhao_reverse, geo(nu, p) + big * root_gap(p), Branch::none};
         })});
    add({"base.zhao_reverse_square", "two-term squared reverse with r0 (sqrt(ab) - a)^2 term", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             const double big = std::max(nu.value(), 1.0 - nu.value());
             return Comparison{sq(arith(nu, p)) + t.zhao_reverse_square,
                               sq(geo(nu, p)) + big * big * sq(p.a() - p.b()), Branch::none};
         })});
    add({"base.kanto_young", "Kantorovich factor K(b/a)^r on the geometric mean", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             return Comparison{std::pow(kantorovich(p.b() / p.a()), t.r) * geo(nu, p), arith(nu, p), Branch::none};
         })});
    add({"base.kanto_ref", "Kantorovich factor K(sqrt(b/a))^r0 plus r (sqrt a - sqrt b)^2", kUnit,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms& t) {
             return Comparison{std::pow(kantorovich(std::sqrt(p.b() / p.a())), t.r0) * geo(nu, p) + t.kittaneh,
                               arith(nu, p), Branch::none};
         })});
    add({"base.minus", "(1+nu)a - nu b <= a^(1+nu) b^(-nu)", kUnbounded,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms&) {
             const double v = nu.value();
             return Comparison{(1.0 + v) * p.a() - v * p.b(), mixed_power(p.a(), 1.0 + v, p.b(), -v), Branch::none};
         })});
    add({"base.minus_refined", "(1+nu)a - nu b + nu (sqrt a - sqrt b)^2 <= a^(1+nu) b^(-nu)", kUnbounded,
         baseline([](const Weight& nu, const ScalarPair& p, const BaselineTerms&) {
             const double v = nu.value();
             return Comparison{(1.0 + v) * p.a() - v * p.b() + v * root_gap(p),
                               mixed_power(p.a(), 1.0 + v, p.b(), -v), Branch::none};
         })});
}

}  // namespace yh
