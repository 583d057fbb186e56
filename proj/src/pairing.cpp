#include "ng/pairing.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace ng {

Rat SymmetricPairing::phase(long g, long h) const {
    auto rg = G.residues(g), rh = G.residues(h);
    Rat t(0);
    for (size_t i = 0; i < rg.size(); ++i)
        for (size_t j = 0; j < rh.size(); ++j)
            t = t + B[i][j] * (rg[i] * rh[j]);
    return t.mod1();
}

bool SymmetricPairing::is_symmetric() const {
    for (long g = 0; g < G.order; ++g)
        for (long h = g + 1; h < G.order; ++h)
            if (phase(g, h) != phase(h, g)) return false;
    return true;
}

bool SymmetricPairing::nondegenerate() const {
    std::set<std::vector<Rat>> rows;
    for (long g = 0; g < G.order; ++g) {
        std::vector<Rat> row;
        row.reserve(G.order);
        for (long h = 0; h < G.order; ++h) row.push_back(phase(g, h));
        if (!rows.insert(std::move(row)).second) return false;
    }
    return true;
}

SymmetricPairing SymmetricPairing::cyclic(long n, long m) {
    if (std::gcd(((m % n) + n) % n, n) != 1)
        throw std::invalid_argument("cyclic pairing: gcd(m,n) != 1 gives a degenerate pairing");
    SymmetricPairing p;
    p.G = AbelianGroup({n});
    p.B = {{Rat(m, n)}};
    return p;
}

SymmetricPairing SymmetricPairing::diagonal(const AbelianGroup& G, const std::vector<long>& ms) {
    if (long(ms.size()) != G.rank())
        throw std::invalid_argument("diagonal pairing: one m per factor required");
    SymmetricPairing p;
    p.G = G;
    p.B.assign(G.rank(), std::vector<Rat>(G.rank(), Rat(0)));
    for (long i = 0; i < G.rank(); ++i) {
        long n = G.factors[i];
        if (std::gcd(((ms[i] % n) + n) % n, n) != 1)
            throw std::invalid_argument("diagonal pairing: gcd(m,n) != 1 on factor " + std::to_string(i));
        p.B[i][i] = Rat(ms[i], n);
    }
    return p;
}

SymmetricPairing SymmetricPairing::transport(const std::vector<long>& phi) const {
    // Express <phi g, phi h> again as a bilinear exponent matrix over the
    // standard generators e_i.
    SymmetricPairing q;
    q.G = G;
    long k = G.rank();
    q.B.assign(k, std::vector<Rat>(k, Rat(0)));
    std::vector<long> gen(k);
    for (long i = 0; i < k; ++i) {
        std::vector<long> r(k, 0);
        r[i] = 1;
        gen[i] = G.index(r);
    }
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            q.B[i][j] = phase(phi[gen[i]], phi[gen[j]]);
    return q;
}

std::vector<std::vector<Rat>> SymmetricPairing::phase_table() const {
    std::vector<std::vector<Rat>> t(G.order, std::vector<Rat>(G.order));
    for (long g = 0; g < G.order; ++g)
        for (long h = 0; h < G.order; ++h) t[g][h] = phase(g, h);
    return t;
}

std::vector<Rat> quadratic_refinement(const SymmetricPairing& p) {
    const AbelianGroup& G = p.G;
    long k = G.rank();
    std::vector<Rat> q(G.order, Rat(0));
    for (long g = 0; g < G.order; ++g) {
        auto r = G.residues(g);
        Rat t(0);
        for (long i = 0; i < k; ++i)
            for (long j = i + 1; j < k; ++j)
                t = t - p.B[i][j] * (r[i] * r[j]);
        for (long i = 0; i < k; ++i) {
            long n = G.factors[i];
            if (n % 2 == 1) {
                // -(n+1)/2 * B_ii * g_i^2, well-defined mod 1 for odd n
                t = t - p.B[i][i] * (r[i] * r[i] * ((n + 1) / 2));
            } else {
                // -B_ii g_i^2 / 2; B_ii = m/n so this is exp(-pi i m g^2/n)
                t = t - Rat(p.B[i][i].num * r[i] * r[i], 2 * p.B[i][i].den);
            }
        }
        q[g] = t.mod1();
    }
    return q;
}

} // namespace ng
