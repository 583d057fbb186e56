#pragma once

#include "ng/modular_data.hpp"
#include "ng/qform.hpp"

namespace ng {

// Closed-form modular data MD_{G,G'}(Q,Q') on n(n+3) primaries, for |G|=n,
// |G'|=n+4 both odd and nondegenerate forms Q,Q'.  `gauss_ok` reports the
// alpha_Q(1) alpha_{Q'}(1) = -1 condition; the matrices are built regardless
// so the negative test path stays exercised.
struct MdQQ {
    ModularData md;
    bool gauss_ok = true;
    cx gauss_product;
};

MdQQ md_qq(const QuadraticForm& Q, const QuadraticForm& Qp);

// Pointed modular data S^Q, T^Q of Proposition 7(a); alpha = +-1 and
// beta^3 = alpha * alpha_Q(1) are preconditions.
ModularData md_point(const QuadraticForm& Q, int alpha, cx beta);

// The explicit fusion-coefficient list for MD_{G,G'}; label order matches
// md_qq.
FusionTensor fusion_closed_form(const AbelianGroup& G, const AbelianGroup& Gp);

struct GaloisReport {
    bool ok = true;
    long ell = 0;
    int jacobi = 0;
    std::vector<std::string> failures;
};

// Verifies the Galois symmetry of md_qq for a given ell coprime to n(n+4):
// the Galois conjugate of S (xi -> xi^ell, delta -> Galois image) equals the
// claimed permutation (a<->b swap when (ell|n(n+4)) = -1, indices scaled by
// ell) with parity +1 on a,b,c and (ell|n(n+4)) on d.
GaloisReport galois_check(const QuadraticForm& Q, const QuadraticForm& Qp, long ell);

// gamma-representatives of {+-gamma} for G' \ {0} in a fixed order
std::vector<long> gamma_orbit_reps(const AbelianGroup& Gp);

} // namespace ng
