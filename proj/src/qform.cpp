#include "ng/qform.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace ng {

QuadraticForm QuadraticForm::cyclic(long n, long m) {
    QuadraticForm q;
    q.G = AbelianGroup({n});
    q.values.resize(n);
    for (long g = 0; g < n; ++g) q.values[g] = Rat(m * g * g, n).mod1();
    return q;
}

QuadraticForm QuadraticForm::diagonal(const AbelianGroup& G, const std::vector<long>& ms) {
    if (long(ms.size()) != G.rank())
        throw std::invalid_argument("QuadraticForm::diagonal: one m per factor");
    QuadraticForm q;
    q.G = G;
    q.values.resize(G.order);
    for (long g = 0; g < G.order; ++g) {
        auto r = G.residues(g);
        Rat t(0);
        for (long i = 0; i < G.rank(); ++i) t = t + Rat(ms[i] * r[i] * r[i], G.factors[i]);
        q.values[g] = t.mod1();
    }
    return q;
}

QuadraticForm QuadraticForm::from_values(const AbelianGroup& G, std::vector<Rat> vals) {
    QuadraticForm q;
    q.G = G;
    q.values = std::move(vals);
    if (long(q.values.size()) != G.order)
        throw std::invalid_argument("QuadraticForm::from_values: size mismatch");
    if (!q.is_even())
        throw std::invalid_argument("QuadraticForm::from_values: Q(-g) != Q(g)");
    return q;
}

bool QuadraticForm::is_even() const {
    for (long g = 0; g < G.order; ++g)
        if (values[g].mod1() != values[G.neg(g)].mod1()) return false;
    return true;
}

SymmetricPairing QuadraticForm::induced_pairing() const {
    // The bilinear phases B(g,h) = Q(g+h)-Q(g)-Q(h) determine the exponent
    // matrix on generators.
    SymmetricPairing p;
    p.G = G;
    long k = G.rank();
    p.B.assign(k, std::vector<Rat>(k));
    std::vector<long> gen(k);
    for (long i = 0; i < k; ++i) {
        std::vector<long> r(k, 0);
        r[i] = 1;
        gen[i] = G.index(r);
    }
    auto bil = [&](long g, long h) {
        return (values[G.add(g, h)] - values[g] - values[h]).mod1();
    };
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) p.B[i][j] = bil(gen[i], gen[j]);
    // validate the matrix reproduces the table (i.e. the form is quadratic)
    for (long g = 0; g < G.order; ++g)
        for (long h = 0; h < G.order; ++h)
            if (p.phase(g, h) != bil(g, h))
                throw std::invalid_argument("QuadraticForm: value table is not quadratic");
    return p;
}

bool QuadraticForm::nondegenerate() const {
    std::set<std::vector<Rat>> rows;
    auto bil = [&](long g, long h) {
        return (values[G.add(g, h)] - values[g] - values[h]).mod1();
    };
    for (long g = 0; g < G.order; ++g) {
        std::vector<Rat> row;
        for (long h = 0; h < G.order; ++h) row.push_back(bil(g, h));
        if (!rows.insert(std::move(row)).second) return false;
    }
    return true;
}

QuadraticForm QuadraticForm::scaled(long a) const {
    QuadraticForm q;
    q.G = G;
    q.values.resize(G.order);
    for (long g = 0; g < G.order; ++g) q.values[g] = (values[g] * a).mod1();
    return q;
}

cx gauss_sum(const QuadraticForm& Q, long a) {
    cx s = 0;
    for (long g = 0; g < Q.G.order; ++g) s += unit_phase(Q.values[g] * a);
    return s / std::sqrt(double(Q.G.order));
}

} // namespace ng
