#pragma once

#include <vector>

#include "youngheinz/matrix.hpp"
#include "youngheinz/scalar.hpp"

namespace yh::hs {

/// coeff * A^p X B^q
struct PowerTerm {
    double coeff = 1.0;
    double p = 0.0;
    double q = 0.0;
};

/// weight * ||sum of terms||_2^2
struct WeightedNorm {
    double weight = 1.0;
    std::vector<PowerTerm> terms;
};

using Expression = std::vector<WeightedNorm>;

/// A = U diag(lambda) U*, B = V diag(mu) V*, Y = U* X V.
struct EigenbasisDecomposition {
    Matrix u;
    Matrix v;
    std::vector<double> lambda;
    std::vector<double> mu;
    Matrix y;
};

/// Evaluates squared Hilbert-Schmidt expressions in A, B (positive
/// semidefinite) and X by direct matrix arithmetic and by the eigenbasis
/// double sum sum_ij (sum_t c lambda_i^p mu_j^q)^2 |y_ij|^2.
class Instance {
public:
    Instance(PsdMatrix a, PsdMatrix b, Matrix x);

    std::size_t dim() const noexcept { return x_.dim(); }
    const PsdMatrix& a() const noexcept { return a_; }
    const PsdMatrix& b() const noexcept { return b_; }
    const Matrix& x() const noexcept { return x_; }
    const EigenbasisDecomposition& eigenbasis() const noexcept { return basis_; }

    double direct(const Expression& e) const;
    double via_eigenbasis(const Expression& e) const;

private:
    PsdMatrix a_;
    PsdMatrix b_;
    Matrix x_;
    EigenbasisDecomposition basis_;
};

struct Evaluation {
    double direct = 0.0;
    double eigenbasis = 0.0;
};

struct HsComparison {
    Evaluation lhs;
    Evaluation rhs;
    Branch branch = Branch::none;

    /// Largest relative disagreement between the two routes.
    double route_gap() const;
};

using BranchedHsComparison = std::vector<HsComparison>;

/// Both sides of a comparison as expressions, for callers that evaluate them
/// some other way.
struct Statement {
    Expression lhs;
    Expression rhs;
    Branch branch = Branch::none;
};

std::vector<Statement> squared_refined_terms(const Weight& nu, RefinementDepth depth);
std::vector<Statement> squared_reverse_terms(const Weight& nu, RefinementDepth depth);
std::vector<Statement> heinz_refined_terms(const Weight& nu, RefinementDepth depth);
std::vector<Statement> heinz_reverse_terms(const Weight& nu, RefinementDepth depth);

BranchedHsComparison evaluate(const Instance& inst, const std::vector<Statement>& statements);

/// N >= 2.
HsComparison squared_refined(const Instance& inst, const Weight& nu, RefinementDepth depth);
BranchedHsComparison squared_reverse(const Instance& inst, const Weight& nu, RefinementDepth depth);
BranchedHsComparison heinz_refined(const Instance& inst, const Weight& nu, RefinementDepth depth);
/// nu in [0, 1/4] (branch error otherwise), N >= 2.
HsComparison heinz_reverse(const Instance& inst, const Weight& nu, RefinementDepth depth);

}  // namespace yh::hs
