#include "ng/tube.hpp"

#include <algorithm>
#include <stdexcept>

#include "ng/numtheory.hpp"

namespace ng {

TubeDecomposition tube_first_class(long n, int s) {
    if (!is_prime_power(n + 1))
        throw std::invalid_argument("tube_first_class: n+1 must be a prime power");
    TubeDecomposition t;
    if (s == -1 && n == 7) {
        t.block_sizes.assign(7, 1);
        t.block_sizes.push_back(7);
        for (long i = 0; i < 44; ++i) t.block_sizes.push_back(2);
    } else {
        t.block_sizes.assign(2 * n + 1, 1);
        t.block_sizes.push_back(n);
        for (long i = 0; i < n * n - n; ++i) t.block_sizes.push_back(2);
    }
    std::sort(t.block_sizes.begin(), t.block_sizes.end());
    for (long b : t.block_sizes) t.total_dim += b * b;
    return t;
}

TubeDecomposition tube_second_class(long n) {
    if (n < 1) throw std::invalid_argument("tube_second_class: n >= 1");
    TubeDecomposition t;
    t.block_sizes.assign(n * (n + 5) / 2, 1);
    for (long i = 0; i < n; ++i) t.block_sizes.push_back(2);
    for (long i = 0; i < n * (n - 1) / 2; ++i) t.block_sizes.push_back(3);
    std::sort(t.block_sizes.begin(), t.block_sizes.end());
    for (long b : t.block_sizes) t.total_dim += b * b;
    return t;
}

AlphaBraidingReport alpha_halfbraiding_condition(const SecondClassSolution& sol,
                                                 const ModularData* md) {
    AlphaBraidingReport rep;
    const AbelianGroup& G = sol.inst.G;
    const SymmetricPairing& p = sol.inst.pairing;
    const long n = G.order;
    const double lambda = double(n) + sol.inst.delta() * sol.inst.delta();
    auto eps = quadratic_refinement(p);
    auto upd = [&](cx lhs, cx rhs, const std::string& what) {
        double d = std::abs(lhs - rhs);
        rep.max_residual = std::max(rep.max_residual, d);
        if (d > 1e-9 && rep.ok) { rep.ok = false; rep.failures.push_back(what); }
    };

    for (long g = 0; g < n; ++g) {
        // c'_g = eps(g) conj(x_dot(g)) conj(x_tilde(g)) for the label x_h;
        // independence of h is the half-braiding existence condition.
        cx cg_ref = 0;
        for (long h = 0; h < n; ++h) {
            // x_tilde_h(g) = <h,g>;  x_dot_h(g) = conj<h,g> a(g) conj(eps(g))
            cx xt = p.value(h, g);
            cx xd = std::conj(p.value(h, g)) * sol.inst.a[g] * std::conj(unit_phase(eps[g]));
            cx cg = unit_phase(eps[g]) * std::conj(xd) * std::conj(xt);
            if (h == 0) cg_ref = cg;
            upd(cg, cg_ref, "c'_g depends on z");
        }
        upd(cg_ref * cg_ref, std::conj(p.value(g, g)), "c'_g^2 != conj<g,g>");
    }

    if (md) {
        for (long g = 0; g < n; ++g) {
            long i = md->find_label({"a", {g}});
            if (i < 0) { rep.ok = false; rep.failures.push_back("md lacks a-labels"); break; }
            upd(md->T[i], p.value(g, g), "T_alpha != <g,g>");
            for (long h = 0; h < n; ++h) {
                long j = md->find_label({"a", {h}});
                upd(md->S(i, j), std::conj(p.value(g, h) * p.value(g, h)) / lambda,
                    "S_alpha != conj<g,h>^2/lambda");
            }
        }
    }
    return rep;
}

} // namespace ng
