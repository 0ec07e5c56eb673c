#include "youngheinz/registry.hpp"

namespace yh {

const std::vector<ManifestRow>& manifest() {
    static const std::vector<ManifestRow> rows = {
        // Classical inequalities and the multi-term refinement
        {"weighted AM-GM inequality", {"scalar.young.refined"}},
        {"one-term squared refinement", {"base.squared"}},
        {"one-term square-root refinement", {"base.kittaneh"}},
        {"two-term refinement", {"base.zhao"}},
        {"two-term reverse", {"base.zhao_reverse"}},
        {"two-term squared reverse", {"base.zhao_reverse_square"}},
        {"multi-term refinement S_N", {"scalar.young.refined"}},
        {"exact remainder R_N", {"scalar.telescoping"}},
        {"symmetry of S_N and R_N", {"scalar.symmetry"}},
        {"Heinz mean inequality", {"scalar.heinz"}},
        // Refined reverses
        {"multi-term refined reverse", {"scalar.reverse.lo", "scalar.reverse.hi", "scalar.reverse.s1"}},
        {"minus-reverse inequality", {"base.minus"}},
        {"refined minus-reverse inequality", {"base.minus_refined"}},
        {"inductive minus-reverse refinement", {"scalar.minus.inductive", "scalar.minus.identity"}},
        {"minus-reverse through S_N(1-nu; ab, b^2)", {"scalar.minus.via_s"}},
        {"minus-reverse through S_N(1/(1+nu); ...)", {"scalar.minus.via_s2"}},
        // Squared versions
        {"multi-term squared refinement", {"scalar.squared.refined"}},
        {"multi-term squared reverse", {"scalar.squared.reverse.lo", "scalar.squared.reverse.hi"}},
        // Double refinements
        {"double refinement", {"scalar.double.refined"}},
        {"squared double refinement", {"scalar.double.squared"}},
        {"double refined reverse", {"scalar.double.reverse.lo", "scalar.double.reverse.hi"}},
        // Kantorovich constant
        {"Kantorovich Young inequality", {"base.kanto_young"}},
        {"Kantorovich one-term refinement", {"base.kanto_ref"}},
        {"Kantorovich multi-term refinement", {"scalar.kanto.young_refined"}},
        {"Kantorovich squared refinement", {"scalar.kanto.square_sab.lo", "scalar.kanto.square_sab.hi"}},
        {"Kantorovich refinement of nu^2 a + (1-nu)^2 b", {"scalar.kanto.nu_square.lo", "scalar.kanto.nu_square.hi"}},
        // Log-convex functions
        {"Kantorovich refinement for log-convex functions", {"lc.proposition"}},
        {"norm family item 1", {"lc.uin.item1"}},
        {"norm family item 2", {"lc.uin.item2"}},
        {"norm family item 3", {"lc.uin.item3"}},
        {"norm family item 4", {"lc.uin.item4"}},
        {"dyadic interpolation bound for log-convex functions", {"lc.gn.monotone"}},
        {"four-step chain for log-convex functions", {"lc.chain"}},
        // Operators
        {"operator multi-term Young refinement", {"op.young.refined"}},
        {"operator refined reverse", {"op.reverse.lo", "op.reverse.hi"}},
        {"operator minus-reverse", {"op.minus.reverse"}},
        {"operator minus-reverse through S_N", {"op.minus.via_s", "op.minus.literal"}},
        {"operator squared refinement", {"op.squared.lo", "op.squared.hi"}},
        {"operator Kantorovich refinement", {"op.kanto"}},
        // Hilbert-Schmidt norms
        {"Hilbert-Schmidt squared refinement", {"hs.squared.refined"}},
        {"Hilbert-Schmidt squared reverse", {"hs.squared.reverse.lo", "hs.squared.reverse.hi"}},
        {"squared Heinz mean refinement", {"scalar.heinz.refined.lo", "scalar.heinz.refined.hi"}},
        {"Hilbert-Schmidt Heinz refinement", {"hs.heinz.refined.lo", "hs.heinz.refined.hi"}},
        {"squared Heinz mean reverse",
         {"scalar.heinz.reverse.b1", "scalar.heinz.reverse.b2", "scalar.heinz.reverse.b3", "scalar.heinz.reverse.b4"}},
        {"Hilbert-Schmidt Heinz reverse", {"hs.heinz.rev"}},
    };
    return rows;
}

}  // namespace yh
