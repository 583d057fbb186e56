#include "ng/md_second.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

namespace ng {

namespace {

// residual vector of the triple system for fixed tau, variables
// v = (Re w, Im w, Re xi_0, Im xi_0, ...)
struct TripleSystem {
    const SecondClassSolution* sol;
    long tau;
    long n;
    double delta, sn;

    void unpack(const Eigen::VectorXd& v, cx& om, std::vector<cx>& xi) const {
        om = cx(v[0], v[1]);
        xi.resize(n);
        for (long g = 0; g < n; ++g) xi[g] = cx(v[2 + 2 * g], v[3 + 2 * g]);
    }

    Eigen::VectorXd F(const Eigen::VectorXd& v) const {
        const AbelianGroup& G = sol->inst.G;
        const auto& a = sol->inst.a;
        const auto& b = sol->b;
        const cx c = sol->inst.c;
        cx om;
        std::vector<cx> xi;
        unpack(v, om, xi);
        std::vector<double> out;
        out.reserve(2 * n * n);
        auto push = [&](cx e) {
            out.push_back(e.real());
            out.push_back(e.imag());
        };
        out.push_back(std::norm(om) - 1.0);
        for (long g = 0; g < n; ++g) out.push_back(std::norm(xi[g]) - 1.0);
        cx c3 = c * c * c, c4 = c3 * c, cm2 = 1.0 / (c * c);
        // sum xi = sqrt(n) w^2 a(tau) c^3 - n/delta
        cx s = 0;
        for (long g = 0; g < n; ++g) s += xi[g];
        push(s - (sn * om * om * a[tau] * c3 - double(n) / delta));
        // conj(c) sum_k b(g+k) xi(k) = w^2 c^3 a(tau) conj(xi(g+tau)) - sqrt(n)/delta
        for (long g = 0; g < n; ++g) {
            cx lhs = 0;
            for (long k = 0; k < n; ++k) lhs += b[G.add(g, k)] * xi[k];
            lhs *= std::conj(c);
            push(lhs - (om * om * c3 * a[tau] * std::conj(xi[G.add(g, tau)]) - sn / delta));
        }
        // xi(tau-g) = w c^4 a(g) a(tau-g) conj(xi(g))
        for (long g = 0; g < n; ++g) {
            long tg = G.sub(tau, g);
            push(xi[tg] - om * c4 * a[g] * a[tg] * std::conj(xi[g]));
        }
        // sum_k xi(k) b(k-g) b(k-h) = c^{-2} b(g+h-tau) xi(g) xi(h) conj(a(g-h)) - c^2/delta
        for (long g = 0; g < n; ++g)
            for (long h = g; h < n; ++h) {
                cx lhs = 0;
                for (long k = 0; k < n; ++k) lhs += xi[k] * b[G.sub(k, g)] * b[G.sub(k, h)];
                cx rhs = cm2 * b[G.sub(G.add(g, h), tau)] * xi[g] * xi[h] *
                             std::conj(a[G.sub(g, h)]) -
                         c * c / delta;
                push(lhs - rhs);
            }
        return Eigen::Map<Eigen::VectorXd>(out.data(), long(out.size()));
    }

    Eigen::MatrixXd J(const Eigen::VectorXd& v) const {
        // central differences; systems are tiny (2n+2 columns)
        const double h = 1e-7;
        Eigen::VectorXd f0 = F(v);
        Eigen::MatrixXd j(f0.size(), v.size());
        Eigen::VectorXd vp = v, vm = v;
        for (long k = 0; k < v.size(); ++k) {
            vp[k] += h;
            vm[k] -= h;
            j.col(k) = (F(vp) - F(vm)) / (2 * h);
            vp[k] = v[k];
            vm[k] = v[k];
        }
        return j;
    }
};

bool gauss_newton(const TripleSystem& sys, Eigen::VectorXd& v, double tol, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd f = sys.F(v);
        if (f.lpNorm<Eigen::Infinity>() < tol) return true;
        Eigen::MatrixXd j = sys.J(v);
        Eigen::VectorXd dv =
            (j.transpose() * j + 1e-12 * Eigen::MatrixXd::Identity(v.size(), v.size()))
                .ldlt()
                .solve(-j.transpose() * f);
        double base = f.norm(), lam = 1.0;
        while (lam > 1e-5 && sys.F(v + lam * dv).norm() > base * (1.0 - 0.25 * lam)) lam *= 0.5;
        v += lam * dv;
        if (!v.allFinite()) return false;
    }
    return sys.F(v).lpNorm<Eigen::Infinity>() < tol;
}

} // namespace

double triple_residual(const SecondClassSolution& sol, const Triple& t) {
    long n = sol.inst.G.order;
    TripleSystem sys{&sol, t.tau, n, sol.inst.delta(), std::sqrt(double(n))};
    Eigen::VectorXd v(2 * n + 2);
    v[0] = t.omega.real();
    v[1] = t.omega.imag();
    for (long g = 0; g < n; ++g) {
        v[2 + 2 * g] = t.xi[g].real();
        v[3 + 2 * g] = t.xi[g].imag();
    }
    return sys.F(v).lpNorm<Eigen::Infinity>();
}

TripleSolveResult solve_triples(const SecondClassSolution& sol, long starts, std::uint64_t seed,
                                int threads) {
    const long n = sol.inst.G.order;
    TripleSolveResult out;
    out.expected = n * (n + 3) / 2;

    for (long tau = 0; tau < n; ++tau) {
        TripleSystem sys{&sol, tau, n, sol.inst.delta(), std::sqrt(double(n))};
        std::vector<std::optional<Eigen::VectorXd>> conv(starts);
        auto work = [&](long lo, long hi) {
            for (long s = lo; s < hi; ++s) {
                std::mt19937_64 eng(seed * 0x9e3779b97f4a7c15ULL + tau * 7919 + s);
                Eigen::VectorXd v(2 * n + 2);
                for (long i = 0; i < n + 1; ++i) {
                    double th = double(eng() >> 11) * (1.0 / 9007199254740992.0) * 2.0 * kPi;
                    v[2 * i] = std::cos(th);
                    v[2 * i + 1] = std::sin(th);
                }
                if (gauss_newton(sys, v, 1e-12, 120)) conv[s] = v;
            }
        };
        int nt = std::max(1, threads);
        if (nt == 1) {
            work(0, starts);
        } else {
            std::vector<std::thread> pool;
            long chunk = (starts + nt - 1) / nt;
            for (int k = 0; k < nt; ++k) {
                long lo = k * chunk, hi = std::min(starts, (k + 1) * chunk);
                if (lo < hi) pool.emplace_back(work, lo, hi);
            }
            for (auto& th : pool) th.join();
        }
        std::vector<Triple> found;
        for (const auto& vc : conv) {
            if (!vc) continue;
            Triple t;
            t.tau = tau;
            cx om;
            std::vector<cx> xi;
            sys.unpack(*vc, om, xi);
            t.omega = om;
            t.xi = std::move(xi);
            bool dup = false;
            for (const auto& f : found) {
                if (std::abs(f.omega - t.omega) > 1e-6) continue;
                double d = 0;
                for (long g = 0; g < n; ++g) d = std::max(d, std::abs(f.xi[g] - t.xi[g]));
                if (d < 1e-6) { dup = true; break; }
            }
            if (!dup) found.push_back(std::move(t));
        }
        // deterministic order within tau
        std::sort(found.begin(), found.end(), [](const Triple& a, const Triple& b) {
            double aa = std::arg(a.omega), bb = std::arg(b.omega);
            if (std::abs(aa - bb) > 1e-9) return aa < bb;
            for (size_t i = 0; i < a.xi.size(); ++i) {
                double ax = std::arg(a.xi[i]), bx = std::arg(b.xi[i]);
                if (std::abs(ax - bx) > 1e-9) return ax < bx;
            }
            return false;
        });
        for (auto& t : found) out.triples.push_back(std::move(t));
    }
    out.complete = long(out.triples.size()) == out.expected;
    return out;
}

ModularData md_second_class(const SecondClassSolution& sol, const std::vector<Triple>& triples) {
    const AbelianGroup& G = sol.inst.G;
    const long n = G.order;
    if (long(triples.size()) != n * (n + 3) / 2)
        throw std::invalid_argument("md_second_class: triple count mismatch");
    const double delta = sol.inst.delta();
    const double lambda = double(n) + delta * delta;
    const cx c = sol.inst.c;
    auto pv = [&](long g, long h) { return sol.inst.pairing.value(g, h); };

    ModularData md;
    for (long g = 0; g < n; ++g) md.labels.push_back({"a", {g}});
    for (long h = 0; h < n; ++h) md.labels.push_back({"b", {h}});
    for (long k = 0; k < n; ++k)
        for (long l = k + 1; l < n; ++l) md.labels.push_back({"c", {k, l}});
    for (long j = 0; j < long(triples.size()); ++j) md.labels.push_back({"d", {j}});
    const long L = long(md.labels.size());
    md.lambda = lambda;
    md.id_index = 0;
    md.S.resize(L, L);
    md.T.resize(L);

    for (long i = 0; i < L; ++i) {
        const Label& l = md.labels[i];
        if (l.family == "a" || l.family == "b") md.T[i] = pv(l.params[0], l.params[0]);
        else if (l.family == "c") md.T[i] = pv(l.params[0], l.params[1]);
        else md.T[i] = triples[l.params[0]].omega;
    }

    cx c6 = std::pow(c, 6);
    auto Sdd = [&](long j1, long j2) {
        const Triple& t1 = triples[j1];
        const Triple& t2 = triples[j2];
        cx s1 = 0;
        for (long g = 0; g < n; ++g) s1 += pv(G.add(G.add(t1.tau, t2.tau), g), g);
        cx s2 = 0;
        for (long g = 0; g < n; ++g)
            for (long h = 0; h < n; ++h) {
                long d = G.sub(h, g);
                s2 += std::conj(t1.xi[g] * t2.xi[h] * pv(G.add(G.sub(t1.tau, t2.tau), d), d));
            }
        return t1.omega * t2.omega * s1 +
               delta * t1.omega * t2.omega * c6 * sol.inst.a[t1.tau] * sol.inst.a[t2.tau] /
                   double(n) * s2;
    };

    auto entry = [&](const Label& x, const Label& y) -> cx {
        const std::string &f1 = x.family, &f2 = y.family;
        if (f1 == "a" && f2 == "a") return std::conj(pv(x.params[0], y.params[0]) * pv(x.params[0], y.params[0]));
        if ((f1 == "a" && f2 == "b") || (f1 == "b" && f2 == "a"))
            return (delta + 1) *
                   std::conj(pv(x.params[0], y.params[0]) * pv(x.params[0], y.params[0]));
        if (f1 == "b" && f2 == "b")
            return std::conj(pv(x.params[0], y.params[0]) * pv(x.params[0], y.params[0]));
        if ((f1 == "a" || f1 == "b") && f2 == "c")
            return (delta + 2) * std::conj(pv(x.params[0], G.add(y.params[0], y.params[1])));
        if (f1 == "c" && (f2 == "a" || f2 == "b"))
            return (delta + 2) * std::conj(pv(G.add(x.params[0], x.params[1]), y.params[0]));
        if (f1 == "c" && f2 == "c")
            return (delta + 2) *
                   (std::conj(pv(x.params[0], y.params[0]) * pv(x.params[1], y.params[1])) +
                    std::conj(pv(x.params[0], y.params[1]) * pv(x.params[1], y.params[0])));
        if (f1 == "a" && f2 == "d") return delta * pv(x.params[0], triples[y.params[0]].tau);
        if (f1 == "d" && f2 == "a") return delta * pv(triples[x.params[0]].tau, y.params[0]);
        if (f1 == "b" && f2 == "d") return -delta * pv(x.params[0], triples[y.params[0]].tau);
        if (f1 == "d" && f2 == "b") return -delta * pv(triples[x.params[0]].tau, y.params[0]);
        if ((f1 == "c" && f2 == "d") || (f1 == "d" && f2 == "c")) return 0.0;
        return Sdd(x.params[0], y.params[0]);
    };
    for (long i = 0; i < L; ++i)
        for (long j = 0; j < L; ++j)
            md.S(i, j) = entry(md.labels[i], md.labels[j]) / lambda;
    return md;
}

} // namespace ng
