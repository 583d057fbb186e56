#pragma once

#include <string>
#include <vector>

#include "ng/rational.hpp"

namespace ng {

// Finite abelian group Z_{n1} x ... x Z_{nk}, elements addressed either by
// residue tuple or by flat index (mixed-radix, first factor slowest).
struct AbelianGroup {
    std::vector<long> factors;
    long order = 1;

    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<long> fs);

    // "Z3", "Z2xZ4", "Z2xZ2xZ2"
    static AbelianGroup parse(const std::string& name);
    std::string name() const;

    long size() const { return order; }
    long rank() const { return long(factors.size()); }

    std::vector<long> residues(long idx) const;
    long index(const std::vector<long>& r) const;

    long add(long a, long b) const;
    long neg(long a) const;
    long sub(long a, long b) const { return add(a, neg(b)); }
    long zero() const { return 0; }

    long element_order(long a) const;

    bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
};

struct GroupElement {
    std::vector<long> residues;
};

// Character of G, given by exponent tuple e: g -> e^{2 pi i sum e_i g_i / n_i}.
struct Character {
    std::vector<long> exponents;

    Rat phase(const AbelianGroup& G, long g) const;
    cx value(const AbelianGroup& G, long g) const { return unit_phase(phase(G, g)); }
    bool is_trivial() const;
};

std::vector<Character> all_characters(const AbelianGroup& G);
// Characters psi with psi^2 = 1 (exponents e with 2e = 0).
std::vector<Character> two_torsion_characters(const AbelianGroup& G);

// All automorphisms of G, each as the image table phi[g] (flat indices).
// Throws if |G| exceeds the bound.
std::vector<std::vector<long>> automorphisms(const AbelianGroup& G, long order_bound = 64);

} // namespace ng
