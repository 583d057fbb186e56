#include "ng/group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ng {

AbelianGroup::AbelianGroup(std::vector<long> fs) : factors(std::move(fs)) {
    order = 1;
    for (long f : factors) {
        if (f < 1) throw std::invalid_argument("AbelianGroup: factors must be >= 1");
        order *= f;
    }
    if (factors.empty()) factors = {1};
}

AbelianGroup AbelianGroup::parse(const std::string& name) {
    std::vector<long> fs;
    size_t i = 0;
    while (i < name.size()) {
        if (name[i] != 'Z' && name[i] != 'z')
            throw std::invalid_argument("group literal must look like Z3 or Z2xZ4: " + name);
        ++i;
        size_t j = i;
        while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
        if (j == i) throw std::invalid_argument("missing order in group literal: " + name);
        fs.push_back(std::stol(name.substr(i, j - i)));
        i = j;
        if (i < name.size()) {
            if (name[i] != 'x' && name[i] != 'X')
                throw std::invalid_argument("bad separator in group literal: " + name);
            ++i;
        }
    }
    if (fs.empty()) throw std::invalid_argument("empty group literal");
    return AbelianGroup(fs);
}

std::string AbelianGroup::name() const {
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(factors[i]);
    }
    return s;
}

std::vector<long> AbelianGroup::residues(long idx) const {
    std::vector<long> r(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        r[i] = idx % factors[i];
        idx /= factors[i];
    }
    return r;
}

long AbelianGroup::index(const std::vector<long>& r) const {
    long idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        long v = r[i] % factors[i];
        if (v < 0) v += factors[i];
        idx = idx * factors[i] + v;
    }
    return idx;
}

long AbelianGroup::add(long a, long b) const {
    auto ra = residues(a), rb = residues(b);
    for (size_t i = 0; i < ra.size(); ++i) ra[i] = (ra[i] + rb[i]) % factors[i];
    return index(ra);
}

long AbelianGroup::neg(long a) const {
    auto r = residues(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = (factors[i] - r[i]) % factors[i];
    return index(r);
}

long AbelianGroup::element_order(long a) const {
    long o = 1, x = a;
    while (x != 0) { x = add(x, a); ++o; }
    return o;
}

Rat Character::phase(const AbelianGroup& G, long g) const {
    auto r = G.residues(g);
    Rat t(0);
    for (size_t i = 0; i < r.size(); ++i) t = t + Rat(exponents[i] * r[i], G.factors[i]);
    return t.mod1();
}

bool Character::is_trivial() const {
    for (long e : exponents) if (e != 0) return false;
    return true;
}

std::vector<Character> all_characters(const AbelianGroup& G) {
    std::vector<Character> out;
    out.reserve(G.order);
    for (long i = 0; i < G.order; ++i) out.push_back(Character{G.residues(i)});
    return out;
}

std::vector<Character> two_torsion_characters(const AbelianGroup& G) {
    std::vector<Character> out;
    for (long i = 0; i < G.order; ++i) {
        auto r = G.residues(i);
        bool ok = true;
        for (size_t k = 0; k < r.size(); ++k)
            if ((2 * r[k]) % G.factors[k] != 0) { ok = false; break; }
        if (ok) out.push_back(Character{r});
    }
    return out;
}

namespace {

// subgroup generated by a set of elements
long span_size(const AbelianGroup& G, const std::vector<long>& gens) {
    std::set<long> S{0};
    for (long g : gens) {
        std::set<long> next;
        for (long s : S) {
            long x = s;
            for (long k = 0; k < G.order; ++k) {
                next.insert(x);
                x = G.add(x, g);
                if (x == s) break;
            }
        }
        S = std::move(next);
    }
    return long(S.size());
}

} // namespace

std::vector<std::vector<long>> automorphisms(const AbelianGroup& G, long order_bound) {
    if (G.order > order_bound)
        throw std::invalid_argument("automorphisms: group order exceeds bound");
    const long k = G.rank();
    // candidates for the image of e_i: elements killed by n_i
    std::vector<std::vector<long>> cand(k);
    for (long i = 0; i < k; ++i)
        for (long a = 0; a < G.order; ++a) {
            auto r = G.residues(a);
            bool ok = true;
            for (long j = 0; j < k; ++j)
                if ((G.factors[i] * r[j]) % G.factors[j] != 0) { ok = false; break; }
            if (ok) cand[i].push_back(a);
        }

    std::vector<std::vector<long>> images;
    std::vector<long> cur;
    // prune: the span of the first i images must have the size of <e_1..e_i>
    std::vector<long> expect(k);
    long p = 1;
    for (long i = 0; i < k; ++i) { p *= G.factors[i]; expect[i] = p; }

    auto rec = [&](auto&& self, long i) -> void {
        if (i == k) { images.push_back(cur); return; }
        for (long a : cand[i]) {
            cur.push_back(a);
            if (span_size(G, cur) == expect[i]) self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<std::vector<long>> maps;
    maps.reserve(images.size());
    for (const auto& im : images) {
        std::vector<long> mp(G.order);
        for (long g = 0; g < G.order; ++g) {
            auto r = G.residues(g);
            long x = 0;
            for (long i = 0; i < k; ++i)
                for (long t = 0; t < r[i]; ++t) x = G.add(x, im[i]);
            mp[g] = x;
        }
        maps.push_back(std::move(mp));
    }
    return maps;
}

} // namespace ng
