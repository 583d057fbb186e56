#pragma once

#include <vector>

#include "ng/pairing.hpp"

namespace ng {

// Q/Z-valued quadratic form on a finite abelian group, stored as exact phases
// per element.  Q(-g) = Q(g), and <g,h>_Q = e^{2 pi i (Q(g+h)-Q(g)-Q(h))} is a
// symmetric pairing.
struct QuadraticForm {
    AbelianGroup G;
    std::vector<Rat> values; // indexed by flat element index

    Rat operator()(long g) const { return values[g]; }

    // Q(g) = m g^2 / n on Z_n.
    static QuadraticForm cyclic(long n, long m);
    // Q(g) = sum m_i g_i^2 / n_i.
    static QuadraticForm diagonal(const AbelianGroup& G, const std::vector<long>& ms);
    // Arbitrary value table; validates evenness Q(-g)=Q(g).
    static QuadraticForm from_values(const AbelianGroup& G, std::vector<Rat> vals);

    bool is_even() const;                    // Q(-g) = Q(g)
    SymmetricPairing induced_pairing() const; // <g,h>_Q (exact, via value table)
    bool nondegenerate() const;

    QuadraticForm scaled(long a) const; // a*Q
};

// alpha_Q(a) = |G|^{-1/2} sum_k e^{2 pi i a Q(k)}.
cx gauss_sum(const QuadraticForm& Q, long a);

} // namespace ng
