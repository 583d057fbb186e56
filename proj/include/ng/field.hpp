#pragma once

#include <string>
#include <vector>

#include "ng/rational.hpp"

namespace ng {

// Small finite field F_q, q = p^k <= 2^16.  Elements are encoded as integers
// 0..q-1 whose base-p digits are the polynomial coefficients (low degree
// first) w.r.t. the stored irreducible modulus.  Multiplication goes through
// log/antilog tables over a fixed generator.
class FiniteField {
public:
    FiniteField(long p, long k);

    long p() const { return p_; }
    long k() const { return k_; }
    long q() const { return q_; }
    const std::vector<long>& modulus() const { return mod_; } // coeffs, low->high, monic
    long generator() const { return gen_; }
    std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

    long add(long a, long b) const;
    long neg(long a) const;
    long sub(long a, long b) const { return add(a, neg(b)); }
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, long e) const;

    // discrete log base the stored generator (a != 0)
    long log(long a) const;
    long exp(long e) const; // generator^e

    // sigma(x) = (1-x)^{-1}; rejects x in {0,1}
    long sigma(long x) const;
    long sigma_inv(long x) const; // sigma^2

    // trace to F_p as an integer 0..p-1
    long trace(long a) const;

    // additive character psi_t(x) = e^{2 pi i tr(t x)/p}
    Rat add_char_phase(long t, long x) const { return Rat(trace(mul(t, x)), p_).mod1(); }
    cx add_char(long t, long x) const { return unit_phase(add_char_phase(t, x)); }

    // domain of sigma
    std::vector<long> punctured() const; // F \ {0,1}

private:
    long p_, k_, q_;
    std::vector<long> mod_;
    long gen_ = 0;
    std::vector<long> log_, exp_;
    long mul_poly(long a, long b) const;
};

struct SigmaReport {
    bool ok = true;
    long fixed_points = 0;
    std::string first_failure;
};

// Checks: sigma bijective on F\{0,1}; sigma^3 = id; sigma(x^{-1}) =
// (sigma^{-1} x)^{-1}; sigma(sigma(a) sigma(b)^{-1}) = sigma^2(a) sigma(b a^{-1})
// for all a != b; fixed-point count matches q-1 mod 3.
SigmaReport verify_sigma_identities(const FiniteField& F);

} // namespace ng
