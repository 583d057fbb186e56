#pragma once

#include <vector>

#include "ng/group.hpp"

namespace ng {

// Symmetric T-valued pairing <g,h> = e^{2 pi i  g^T B h} with exact rational
// exponent matrix B (B_ij has denominator dividing gcd(n_i, n_j)).
struct SymmetricPairing {
    AbelianGroup G;
    std::vector<std::vector<Rat>> B;

    Rat phase(long g, long h) const;
    cx value(long g, long h) const { return unit_phase(phase(g, h)); }

    bool is_symmetric() const;
    // g -> <g,.> injective, checked exhaustively.
    bool nondegenerate() const;

    // <g,h> = e^{2 pi i m g h / n} on Z_n; rejects gcd(m,n) != 1.
    static SymmetricPairing cyclic(long n, long m);
    // Diagonal pairing exp(2 pi i sum m_i g_i h_i / n_i); each gcd(m_i,n_i)=1.
    static SymmetricPairing diagonal(const AbelianGroup& G, const std::vector<long>& ms);

    // Transport by an automorphism: <g,h>' := <phi g, phi h>.
    SymmetricPairing transport(const std::vector<long>& phi) const;

    // Exact phase table of the pairing, used as an orbit/equality key.
    std::vector<std::vector<Rat>> phase_table() const;
};

// Quadratic refinement q of the pairing: exact phases with
//   q(g+h) - q(g) - q(h) = -<g,h>  (as phases mod 1),   q(-g) = q(g).
// exp(2 pi i q) is the epsilon-function representative (unique for odd |G|;
// for an even cyclic factor with <g,h> = e^{2 pi i m g h / n} it is
// exp(-pi i m g^2 / n)).
std::vector<Rat> quadratic_refinement(const SymmetricPairing& p);

// Epsilon-function for the pairing as exact phases: eps(g) = e^{2 pi i q(g)}
// with eps(-g) = eps(g) and eps(g+h) = conj<g,h> eps(g) eps(h).
inline std::vector<Rat> epsilon_function(const SymmetricPairing& p) {
    return quadratic_refinement(p);
}

} // namespace ng
