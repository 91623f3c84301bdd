#pragma once
#include "ccnet/network.hpp"

namespace ccnet {

// f o_Sigma g = f o ((g o A_{sigma_1}) x ... x (g o A_{sigma_n})); satisfies
// gamma_{f o_Sigma g} = gamma_f o gamma_g and is associative.
PolyMap sigma_compose(const NetworkSpec& spec, const PolyMap& f, const PolyMap& g);

// [f,g]_Sigma = sum_j Df_j (g o A_{sigma_j}) - Dg_j (f o A_{sigma_j}), the
// pullback of the Jacobian bracket of gamma_f and gamma_g.
PolyMap sigma_bracket(const NetworkSpec& spec, const PolyMap& f, const PolyMap& g);

// Matrix of ad_{f0} = [f0, .]_Sigma on basis(k, l); column for entry b holds
// the coordinates of [f0, b]_Sigma. f0 must be linear homogeneous (grade
// (0,0)).
struct AdMatrix {
    GradedBasis basis;
    RationalMatrix mat;
};

AdMatrix ad_matrix(const NetworkSpec& spec, const PolyMap& f0, int k, int l);

// Echelon basis of ker gamma in grade (k, l): all h with h o pi_i = 0 for
// every cell i. The null space is computed from the exact coefficient matrix
// of h |-> (h o pi_1, ..., h o pi_N) and row-reduced, so the basis is the
// unique RREF basis of the subspace.
struct KernelGamma {
    GradedBasis basis;                       // monomial basis of the grade
    std::vector<std::vector<Rat>> vectors;   // echelon rows, coordinates in basis
    std::vector<PolyMap> elements;           // the same rows as polynomial maps
};

KernelGamma kernel_gamma(const NetworkSpec& spec, int k, int l);

} // namespace ccnet
