#pragma once

#include "ng/first_class.hpp"
#include "ng/modular_data.hpp"

namespace ng {

// One half-braiding datum for sigma = rho: zeta_1 and zeta_x for x in
// F_q \ {0,1}, solving the projection equations.
struct ZetaVector {
    cx zeta1;
    std::vector<cx> zeta; // indexed by field element code (entries 0,1 unused)
};

// Max residual of the zeta projection equations for this solution.
double zeta_residual(const FirstClassSolution& sol, const ZetaVector& z);

// All n+1 solutions: a particular solution times the additive-character
// family.  Requires the commutative case (s = omega = 1, or n <= 3); the
// (n,s) = (7,-1) system uses the rho^{+-} route in md_first_class instead.
std::vector<ZetaVector> solve_zeta(const FirstClassSolution& sol);

// Corollary 6 modular data for the double.  For (n,s) = (7,-1) pass no zetas
// (the two rho^{+-} primaries are built in); otherwise zetas must be the
// n+1 vectors from solve_zeta.
ModularData md_first_class(const FirstClassSolution& sol, const std::vector<ZetaVector>& zetas);

// Convenience: canonical solution for q, full pipeline.
ModularData md_first_class_canonical(long q);

} // namespace ng
