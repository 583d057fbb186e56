#pragma once

#include <map>
#include <string>
#include <vector>

#include "ng/izumi.hpp"
#include "ng/modular_data.hpp"

namespace ng {

struct TubeDecomposition {
    std::vector<long> block_sizes; // sorted ascending
    long total_dim = 0;            // sum of size^2
    long block_count() const { return long(block_sizes.size()); }
};

// C^{2n+1} + M_n + (M_2)^{n^2-n}, except (n,s)=(7,-1): C^7 + M_7 + (M_2)^44.
TubeDecomposition tube_first_class(long n, int s);

// C^{n(n+5)/2} + (M_2)^n + (M_3)^{n(n-1)/2}.
TubeDecomposition tube_second_class(long n);

struct AlphaBraidingReport {
    bool ok = true;
    double max_residual = 0;
    std::vector<std::string> failures;
};

// Checks c'_g = eps(g) conj(x_dot(g)) conj(x_tilde(g)) is independent of the
// choice of z (automatic for n'=n) and that c'_g^2 = conj<g,g>.  When `md` is
// supplied, also compares its alpha-sector T/S entries against the closed
// forms T = <g,g>, S = conj<g,h>^2 / lambda.
AlphaBraidingReport alpha_halfbraiding_condition(const SecondClassSolution& sol,
                                                 const ModularData* md = nullptr);

} // namespace ng
