#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ng/field.hpp"

namespace ng {

// Sixth root of unity e^{2 pi i k/6}, closed under the products and
// conjugates appearing in the type G+(n-1) equations.  All catalogued table
// values live here, so verification is exact.
struct Mu6 {
    int k = 0; // exponent mod 6
    Mu6() = default;
    explicit Mu6(int e) : k(((e % 6) + 6) % 6) {}
    static Mu6 one() { return Mu6(0); }
    static Mu6 minus_one() { return Mu6(3); }
    static Mu6 omega() { return Mu6(2); } // e^{2 pi i/3}
    Mu6 operator*(Mu6 o) const { return Mu6(k + o.k); }
    Mu6 conj() const { return Mu6(-k); }
    bool operator==(Mu6 o) const { return k == o.k; }
    bool operator!=(Mu6 o) const { return k != o.k; }
    cx value() const { return unit_phase(Rat(k, 6)); }
};

inline Mu6 sign_mu6(int s) { return s >= 0 ? Mu6::one() : Mu6::minus_one(); }

// Numerical invariants of a type Z_n + (n-1) category in the fixed-field
// normal form: s, a(x) in {1,s}, b(x), b''(x,y) for x,y in F_q \ {0,1},
// xy != 1.  Tables are indexed by field element code.
struct FirstClassSolution {
    std::shared_ptr<const FiniteField> F;
    int s = 1; // +-1
    std::map<long, Mu6> a, b;
    std::map<std::pair<long, long>, Mu6> bpp;
    std::string label;

    long q() const { return F->q(); }
    long n() const { return F->q() - 1; }

    Mu6 aval(long x) const { return a.at(x); }
    Mu6 bval(long x) const { return b.at(x); }
    Mu6 bppval(long x, long y) const { return bpp.at({x, y}); }
    // b'(x) = s a(x) conj(b(x^{-1}))
    Mu6 bprime(long x) const { return sign_mu6(s) * aval(x) * bval(F->inv(x)).conj(); }

    // pointwise product / conjugate (the group law on equivalence classes)
    FirstClassSolution product(const FirstClassSolution& other) const;
    FirstClassSolution conjugate() const;
};

struct Theorem3Report {
    bool ok = true;
    double max_residual = 0.0;
    long checked = 0;
    std::string first_failure;
};

// The all-ones solution (s=1, a=b=b''=1) for F_q; exists for every prime
// power q >= 2 and realises the module category of the affine group.
FirstClassSolution canonical_first_class(long q);

// The catalogued exceptional solutions: n=1 (s=-1), n=2 (b(-1)=omega^{+-1},
// two variants), n=3 (s=-1), n=7 (s=-1 with the printed 6x6 sign matrix).
FirstClassSolution exceptional_first_class(long n, long variant);

// All inequivalent solutions for this n (canonical + exceptionals).
std::vector<FirstClassSolution> first_class_catalog(long n);

// Exhaustive exact check of every Theorem-3 identity (sigma structure,
// a/b constraints, and the four b'' equations over their stated domains).
Theorem3Report verify_theorem3(const FirstClassSolution& sol);

// Number of inequivalence classes for type Z_n + (n-1); 0 when n+1 is not a
// prime power.  When `certify` is set the count is confirmed by building the
// doubles' modular data and checking pairwise non-matching (see md_first).
long count_first_class(long n);

} // namespace ng
