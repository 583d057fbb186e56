#include "ng/field.hpp"

#include <stdexcept>

#include "ng/numtheory.hpp"

namespace ng {

namespace {

// polynomial arithmetic over F_p with coefficient vectors (low degree first)
std::vector<long> poly_mod(std::vector<long> a, const std::vector<long>& m, long p) {
    long dm = long(m.size()) - 1;
    while (long(a.size()) > dm) {
        long c = a.back();
        long d = long(a.size()) - 1;
        if (c != 0)
            for (long i = 0; i <= dm; ++i) {
                long& t = a[d - dm + i];
                t = ((t - c * m[i]) % p + p) % p;
            }
        a.pop_back();
    }
    return a;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b, long p) {
    std::vector<long> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return c;
}

bool divides(const std::vector<long>& d, std::vector<long> f, long p) {
    // monic divisor d
    long dd = long(d.size()) - 1;
    while (long(f.size()) - 1 >= dd) {
        while (!f.empty() && f.back() == 0) f.pop_back();
        if (long(f.size()) - 1 < dd) break;
        long c = f.back();
        long shift = long(f.size()) - 1 - dd;
        for (long i = 0; i <= dd; ++i) f[shift + i] = ((f[shift + i] - c * d[i]) % p + p) % p;
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f.empty();
}

bool irreducible(const std::vector<long>& f, long p) {
    long k = long(f.size()) - 1;
    if (k == 1) return true;
    // trial division by all monic polynomials of degree 1..k/2
    for (long d = 1; 2 * d <= k; ++d) {
        long count = 1;
        for (long i = 0; i < d; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            std::vector<long> g(d + 1, 0);
            long c = code;
            for (long i = 0; i < d; ++i) { g[i] = c % p; c /= p; }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

} // namespace

FiniteField::FiniteField(long p, long k) : p_(p), k_(k) {
    if (!is_prime(p)) throw std::invalid_argument("FiniteField: p must be prime");
    if (k < 1) throw std::invalid_argument("FiniteField: k must be >= 1");
    q_ = 1;
    for (long i = 0; i < k; ++i) {
        q_ *= p;
        if (q_ > (1L << 16)) throw std::invalid_argument("FiniteField: q exceeds 2^16");
    }
    if (k == 1) {
        mod_ = {0, 1};
    } else {
        // lowest monic modulus in lexicographic order on (c_{k-1},...,c_0)
        long count = 1;
        for (long i = 0; i < k; ++i) count *= p;
        bool found = false;
        for (long code = 0; code < count && !found; ++code) {
            std::vector<long> f(k + 1, 0);
            long c = code;
            // code digits assign high coefficients first so low lex wins
            for (long i = k - 1; i >= 0; --i) { f[i] = c % p; c /= p; }
            f[k] = 1;
            if (f[0] == 0) continue; // reducible (root 0)
            if (irreducible(f, p)) { mod_ = f; found = true; }
        }
        if (!found) throw std::runtime_error("FiniteField: no irreducible modulus found");
    }
    // find a generator of F_q^* and build log tables
    log_.assign(q_, -1);
    exp_.assign(q_ - 1, 0);
    for (long g = (k_ == 1 ? 1 : 2); g < q_; ++g) {
        long x = 1;
        bool ok = true;
        std::vector<long> seen(q_, 0);
        for (long e = 0; e < q_ - 1; ++e) {
            if (seen[x]) { ok = false; break; }
            seen[x] = 1;
            x = mul_poly(x, g);
        }
        if (ok && x == 1) { gen_ = g; break; }
    }
    if (gen_ == 0) gen_ = 1; // q = 2
    long x = 1;
    for (long e = 0; e < q_ - 1; ++e) {
        exp_[e] = x;
        log_[x] = e;
        x = mul_poly(x, gen_);
    }
}

long FiniteField::mul_poly(long a, long b) const {
    if (k_ == 1) return (a * b) % p_;
    std::vector<long> A(k_), Bv(k_);
    long ta = a, tb = b;
    for (long i = 0; i < k_; ++i) { A[i] = ta % p_; ta /= p_; Bv[i] = tb % p_; tb /= p_; }
    auto C = poly_mod(poly_mul(A, Bv, p_), mod_, p_);
    long r = 0, w = 1;
    for (size_t i = 0; i < C.size(); ++i) { r += C[i] * w; w *= p_; }
    return r;
}

long FiniteField::add(long a, long b) const {
    if (k_ == 1) return (a + b) % p_;
    long r = 0, w = 1;
    for (long i = 0; i < k_; ++i) {
        long da = (a / w) % p_, db = (b / w) % p_;
        r += ((da + db) % p_) * w;
        w *= p_;
    }
    return r;
}

long FiniteField::neg(long a) const {
    if (k_ == 1) return (p_ - a) % p_;
    long r = 0, w = 1;
    for (long i = 0; i < k_; ++i) {
        long d = (a / w) % p_;
        r += ((p_ - d) % p_) * w;
        w *= p_;
    }
    return r;
}

long FiniteField::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

long FiniteField::inv(long a) const {
    if (a == 0) throw std::invalid_argument("FiniteField::inv(0)");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

long FiniteField::pow(long a, long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long m = ((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1);
    return exp_[(log_[a] * m) % (q_ - 1)];
}

long FiniteField::log(long a) const {
    if (a == 0) throw std::invalid_argument("FiniteField::log(0)");
    return log_[a];
}

long FiniteField::exp(long e) const {
    return exp_[((e % (q_ - 1)) + (q_ - 1)) % (q_ - 1)];
}

long FiniteField::sigma(long x) const {
    if (x == 0 || x == 1) throw std::invalid_argument("sigma: x must avoid {0,1}");
    return inv(sub(1, x));
}

long FiniteField::sigma_inv(long x) const { return sigma(sigma(x)); }

long FiniteField::trace(long a) const {
    long t = a, s = a;
    for (long i = 1; i < k_; ++i) {
        t = pow(t, p_);
        s = add(s, t);
    }
    if (s >= p_) throw std::runtime_error("trace not in prime field");
    return s;
}

std::vector<long> FiniteField::punctured() const {
    std::vector<long> v;
    v.reserve(q_ - 2);
    for (long x = 2; x < q_; ++x) v.push_back(x);
    return v;
}

SigmaReport verify_sigma_identities(const FiniteField& F) {
    SigmaReport rep;
    auto dom = F.punctured();
    auto fail = [&](const std::string& msg) {
        if (rep.ok) { rep.ok = false; rep.first_failure = msg; }
    };
    std::vector<long> hit(F.q(), 0);
    for (long x : dom) {
        long s = F.sigma(x);
        if (s == 0 || s == 1 || hit[s]) fail("sigma not a bijection of F\\{0,1}");
        else hit[s] = 1;
        if (F.sigma(F.sigma(s)) != x) fail("sigma^3 != id at x=" + std::to_string(x));
        if (s == x) ++rep.fixed_points;
        // sigma(x^{-1}) = (sigma^{-1} x)^{-1}
        if (F.sigma(F.inv(x)) != F.inv(F.sigma_inv(x))) fail("conjugation rule fails");
    }
    long n = F.q() - 1;
    long want = (n % 3 == 1) ? 0 : (n % 3 == 2) ? 1 : 2;
    if (rep.fixed_points != want) fail("fixed point count mismatch");
    for (long a : dom)
        for (long b : dom) {
            if (a == b) continue;
            long lhs = F.sigma(F.mul(F.sigma(a), F.inv(F.sigma(b))));
            long rhs = F.mul(F.sigma_inv(a), F.sigma(F.mul(b, F.inv(a))));
            if (lhs != rhs) {
                fail("composite sigma identity fails at (" + std::to_string(a) + "," +
                     std::to_string(b) + ")");
            }
        }
    return rep;
}

} // namespace ng
