#include "ng/first_class.hpp"

#include <stdexcept>

#include "ng/numtheory.hpp"

namespace ng {

namespace {

std::shared_ptr<const FiniteField> make_field(long q) {
    long p = prime_power_base(q);
    if (p == 0) throw std::invalid_argument("first class: q must be a prime power");
    long k = 0, m = q;
    while (m > 1) { m /= p; ++k; }
    return std::make_shared<FiniteField>(p, k);
}

FirstClassSolution all_ones(std::shared_ptr<const FiniteField> F, int s) {
    FirstClassSolution sol;
    sol.F = std::move(F);
    sol.s = s;
    for (long x : sol.F->punctured()) {
        sol.a[x] = Mu6::one();
        sol.b[x] = Mu6::one();
        for (long y : sol.F->punctured())
            if (sol.F->mul(x, y) != 1) sol.bpp[{x, y}] = Mu6::one();
    }
    return sol;
}

} // namespace

FirstClassSolution FirstClassSolution::product(const FirstClassSolution& o) const {
    if (q() != o.q()) throw std::invalid_argument("product: mismatched q");
    FirstClassSolution r = *this;
    r.s = s * o.s;
    for (auto& [x, v] : r.a) v = v * o.a.at(x);
    for (auto& [x, v] : r.b) v = v * o.b.at(x);
    for (auto& [xy, v] : r.bpp) v = v * o.bpp.at(xy);
    r.label = label + "*" + o.label;
    return r;
}

FirstClassSolution FirstClassSolution::conjugate() const {
    FirstClassSolution r = *this;
    for (auto& [x, v] : r.a) v = v.conj();
    for (auto& [x, v] : r.b) v = v.conj();
    for (auto& [xy, v] : r.bpp) v = v.conj();
    r.label = "conj(" + label + ")";
    return r;
}

FirstClassSolution canonical_first_class(long q) {
    auto sol = all_ones(make_field(q), 1);
    sol.label = "canonical";
    return sol;
}

FirstClassSolution exceptional_first_class(long n, long variant) {
    switch (n) {
        case 1: {
            if (variant != 0) throw std::invalid_argument("n=1 has one exceptional solution");
            auto sol = all_ones(make_field(2), -1);
            sol.label = "s=-1";
            return sol;
        }
        case 2: {
            // b(-1) = omega^{+-1}; -1 = 2 in F_3, the only domain point.
            if (variant != 0 && variant != 1)
                throw std::invalid_argument("n=2 has two exceptional solutions");
            auto sol = all_ones(make_field(3), 1);
            sol.b[2] = variant == 0 ? Mu6::omega() : Mu6::omega().conj();
            sol.label = variant == 0 ? "omega" : "omega^2";
            return sol;
        }
        case 3: {
            // Table labels j <-> gen^j; a = (1,s), b = s a, b''(x,x) = a(x).
            if (variant != 0) throw std::invalid_argument("n=3 has one exceptional solution");
            auto F = make_field(4);
            FirstClassSolution sol;
            sol.F = F;
            sol.s = -1;
            long x1 = F->exp(1), x2 = F->exp(2);
            sol.a[x1] = Mu6::one();
            sol.a[x2] = Mu6::minus_one();
            for (long x : {x1, x2}) sol.b[x] = sign_mu6(sol.s) * sol.a[x];
            sol.bpp[{x1, x1}] = sol.a[x1];
            sol.bpp[{x2, x2}] = sol.a[x2];
            sol.label = "s=-1";
            return sol;
        }
        case 7: {
            if (variant != 0) throw std::invalid_argument("n=7 has one exceptional solution");
            auto F = make_field(8);
            FirstClassSolution sol;
            sol.F = F;
            sol.s = -1;
            // Table labels j=1..6 <-> gen^j; a = (1,1,s,1,s,s), b = s a.
            const int asign[7] = {0, +1, +1, -1, +1, -1, -1};
            std::vector<long> lab(7);
            for (long j = 1; j <= 6; ++j) lab[j] = F->exp(j);
            for (long j = 1; j <= 6; ++j) {
                sol.a[lab[j]] = sign_mu6(asign[j]);
                sol.b[lab[j]] = sign_mu6(sol.s) * sol.a[lab[j]];
            }
            // printed sign matrix; 0 marks the excluded anti-diagonal xy=1
            const int M[6][6] = {
                {+1, -1, -1, +1, -1, 0},
                {+1, +1, -1, -1, 0, -1},
                {-1, -1, +1, 0, +1, +1},
                {-1, +1, 0, +1, -1, -1},
                {-1, 0, +1, -1, +1, +1},
                {0, -1, +1, -1, +1, +1},
            };
            for (long i = 1; i <= 6; ++i)
                for (long j = 1; j <= 6; ++j) {
                    if (i + j == 7) continue;
                    sol.bpp[{lab[i], lab[j]}] = sign_mu6(M[i - 1][j - 1]);
                }
            sol.label = "s=-1";
            return sol;
        }
        default:
            throw std::invalid_argument("no exceptional first-class solutions for n=" +
                                        std::to_string(n));
    }
}

std::vector<FirstClassSolution> first_class_catalog(long n) {
    if (!is_prime_power(n + 1)) return {};
    std::vector<FirstClassSolution> out;
    out.push_back(canonical_first_class(n + 1));
    if (n == 1 || n == 3 || n == 7) out.push_back(exceptional_first_class(n, 0));
    if (n == 2) {
        out.push_back(exceptional_first_class(2, 0));
        out.push_back(exceptional_first_class(2, 1));
    }
    return out;
}

Theorem3Report verify_theorem3(const FirstClassSolution& sol) {
    Theorem3Report rep;
    const FiniteField& F = *sol.F;
    auto dom = F.punctured();
    Mu6 sm = sign_mu6(sol.s);

    auto check = [&](bool cond, const cx& lhs, const cx& rhs, const std::string& what) {
        ++rep.checked;
        double r = std::abs(lhs - rhs);
        if (r > rep.max_residual) rep.max_residual = r;
        if (!cond && rep.ok) { rep.ok = false; rep.first_failure = what; }
    };
    auto eq = [&](Mu6 lhs, Mu6 rhs, const std::string& what) {
        check(lhs == rhs, lhs.value(), rhs.value(), what);
    };

    auto sig = verify_sigma_identities(F);
    if (!sig.ok && rep.ok) { rep.ok = false; rep.first_failure = "sigma: " + sig.first_failure; }

    for (long x : dom) {
        // a(x) in {1, s}
        bool in_range = sol.aval(x) == Mu6::one() || sol.aval(x) == sm;
        check(in_range, sol.aval(x).value(), cx(1), "a(x) not in {1,s}");
        eq(sol.aval(x), sol.aval(F.sigma(x)), "a(x)=a(sigma x)");
        eq(sol.aval(x), sm * sol.aval(F.inv(x)), "a(x)=s a(conj x)");
        eq(sol.bval(F.inv(F.sigma(x))), sm * sol.bval(x), "b(conj sigma x)=s b(x)");
        eq(sol.bval(x) * sol.bval(F.sigma(x)) * sol.bval(F.sigma_inv(x)), sm * sol.aval(x),
           "b b b = s a");
        // sigma fixed points force b(f)=1
        if (F.sigma(x) == x) eq(sol.bval(x), Mu6::one(), "b(fixed point)=1");
    }

    auto sigma = [&](long x) { return F.sigma(x); };
    auto sigma2 = [&](long x) { return F.sigma_inv(x); };
    auto inv = [&](long x) { return F.inv(x); };
    auto mul = [&](long x, long y) { return F.mul(x, y); };

    for (long x : dom)
        for (long y : dom) {
            if (mul(x, y) == 1) continue;
            long xy = mul(x, y);
            // (bpplcbpp)
            eq(sol.bppval(x, y),
               sm * sol.aval(y) * sol.aval(mul(sigma(xy), inv(sigma(x)))) *
                   sol.bppval(xy, inv(y)).conj(),
               "b'' left-conjugate identity");
            // (bpprcbpp)
            eq(sol.bppval(x, y),
               sm * sol.aval(x) * sol.bval(mul(sigma(x), inv(sigma(xy)))) *
                   sol.bppval(inv(x), xy).conj(),
               "b'' right-conjugate identity");
            // (bpppibpp)
            eq(sol.bppval(x, y),
               sm * sol.bval(inv(x)) * sol.bval(y).conj() * sol.bval(xy) *
                   sol.bval(inv(mul(sigma2(x), sigma(y)))) *
                   sol.bppval(inv(sigma2(x)), inv(sigma(y))).conj(),
               "b'' inversion identity");
            // (bppbppbpp)
            for (long w : dom) {
                if (w == x || w == xy) continue;
                Mu6 lhs = sol.bppval(mul(sigma(w), inv(sigma(x))), mul(sigma(x), inv(sigma(xy)))) *
                          sol.bppval(x, y) * sol.bppval(w, mul(x, inv(w)));
                Mu6 rhs = sol.bppval(w, mul(xy, inv(w))) * sol.bppval(mul(x, inv(w)), y);
                eq(lhs, rhs, "b'' pentagon identity");
            }
        }
    return rep;
}

long count_first_class(long n) {
    return long(first_class_catalog(n).size());
}

} // namespace ng
