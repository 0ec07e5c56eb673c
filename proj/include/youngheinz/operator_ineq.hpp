#pragma once

#include <vector>

#include "youngheinz/matrix.hpp"
#include "youngheinz/scalar.hpp"

namespace yh::op {

/// Mean exponents of one refinement level.
struct ExponentLevel {
    int j = 0;
    double alpha = 0.0;  // k_j(nu) / 2^(j-1)
    double beta = 0.0;   // k_j(2 nu) / 2^j, lower branch only
    double gamma = 0.0;  // k_j(2 - 2 nu) / 2^j, upper branch only
};

std::vector<ExponentLevel> exponent_schedule(const Weight& nu, RefinementDepth depth);

struct OperatorComparison {
    HermitianMatrix lhs;
    HermitianMatrix rhs;
    Branch branch = Branch::none;
};

using BranchedOperatorComparison = std::vector<OperatorComparison>;

/// Left side with a literal A B^-1 A prefactor. Not Hermitian in general.
struct LiteralForm {
    Matrix lhs;
    double hermiticity_defect = 0.0;  // ||L - L*||_F / ||L||_F
};

struct MinusViaS {
    OperatorComparison transferred;
    LiteralForm literal;
};

OperatorComparison young_refined(const MeanFrame& frame, const Weight& nu, RefinementDepth depth);
BranchedOperatorComparison reverse_refined(const MeanFrame& frame, const Weight& nu, RefinementDepth depth);
/// nu >= 0; uses the extended means A nabla_(-nu) B and A #_(-nu) B.
OperatorComparison minus_reverse(const MeanFrame& frame, const Weight& nu, RefinementDepth depth);
MinusViaS minus_reverse_via_s(const SpdMatrix& a, const SpdMatrix& b, const Weight& nu, RefinementDepth depth);
BranchedOperatorComparison squared(const MeanFrame& frame, const Weight& nu, RefinementDepth depth);
/// Precondition error unless both matrices lie between m I and M I.
OperatorComparison kanto(const SpdMatrix& a, const SpdMatrix& b, const Weight& nu, RefinementDepth depth,
                         const SpectralBounds& bounds);

}  // namespace yh::op
