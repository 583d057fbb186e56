#include "ng/izumi.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "ng/dd.hpp"

namespace ng {

namespace {

// deterministic uniform in [-1.5, 1.5] from a per-start engine
double unit_box(std::mt19937_64& eng) {
    return (double(eng() >> 11) * (1.0 / 9007199254740992.0)) * 3.0 - 1.5;
}

} // namespace

std::vector<cx> LinearStage::b_of(const Eigen::VectorXd& t) const {
    Eigen::VectorXd v = origin;
    if (basis.cols() > 0) v += basis * t;
    long n = v.size() / 2;
    std::vector<cx> b(n);
    for (long i = 0; i < n; ++i) b[i] = cx(v[i], v[n + i]);
    return b;
}

std::vector<std::vector<cx>> a_candidates(const AbelianGroup& G, const SymmetricPairing& p) {
    auto q = quadratic_refinement(p);
    std::vector<cx> base(G.order);
    for (long g = 0; g < G.order; ++g) base[g] = unit_phase(q[g]);
    std::vector<std::vector<cx>> out;
    for (const auto& psi : two_torsion_characters(G)) {
        std::vector<cx> a(G.order);
        for (long g = 0; g < G.order; ++g) a[g] = base[g] * psi.value(G, g);
        out.push_back(std::move(a));
    }
    return out;
}

std::vector<cx> c_candidates(const AbelianGroup& G, const std::vector<cx>& a) {
    cx sum = 0;
    for (const cx& v : a) sum += v;
    double n = double(G.order);
    if (std::abs(sum) < 1e-12 || std::abs(std::abs(sum) - std::sqrt(n)) > 1e-9) return {};
    cx c3 = std::sqrt(n) / sum;
    double arg = std::arg(c3) / 3.0;
    std::vector<cx> out;
    for (int r = 0; r < 3; ++r)
        out.push_back(std::polar(1.0, arg + 2.0 * kPi * r / 3.0));
    return out;
}

LinearStage linear_stage(const SecondClassInstance& inst) {
    const AbelianGroup& G = inst.G;
    const long n = G.order;
    const double sn = std::sqrt(double(n));
    const double delta = inst.delta();

    // variables x = (Re b(0..n-1), Im b(0..n-1))
    std::vector<Eigen::VectorXd> rows;
    std::vector<double> rhs;
    auto push = [&](const Eigen::VectorXd& r, double v) { rows.push_back(r); rhs.push_back(v); };

    Eigen::VectorXd e = Eigen::VectorXd::Zero(2 * n);
    e[0] = 1;
    push(e, -1.0 / delta);
    e.setZero();
    e[n] = 1;
    push(e, 0.0);

    for (long x = 0; x < n; ++x) {
        // sum_y conj<p x,y> b(y) - sqrt(n) c conj(b(x)) = 0  (2 real rows)
        Eigen::VectorXd re = Eigen::VectorXd::Zero(2 * n), im = Eigen::VectorXd::Zero(2 * n);
        for (long y = 0; y < n; ++y) {
            cx w = std::conj(inst.pairing.value(x, y));
            re[y] += w.real();
            re[n + y] += -w.imag();
            im[y] += w.imag();
            im[n + y] += w.real();
        }
        cx sc = sn * inst.c;
        re[x] -= sc.real();
        re[n + x] -= sc.imag();
        im[x] -= sc.imag();
        im[n + x] += sc.real();
        push(re, 0.0);
        push(im, 0.0);

        // a(x) b(-x) - conj(b(x)) = 0
        long mx = G.neg(x);
        Eigen::VectorXd re2 = Eigen::VectorXd::Zero(2 * n), im2 = Eigen::VectorXd::Zero(2 * n);
        re2[mx] += inst.a[x].real();
        re2[n + mx] += -inst.a[x].imag();
        re2[x] -= 1.0;
        im2[mx] += inst.a[x].imag();
        im2[n + mx] += inst.a[x].real();
        im2[n + x] += 1.0;
        push(re2, 0.0);
        push(im2, 0.0);
    }

    Eigen::MatrixXd A(rows.size(), 2 * n);
    Eigen::VectorXd r(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) { A.row(i) = rows[i]; r[i] = rhs[i]; }

    LinearStage out;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeFullV);
    double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
    double thr = std::max(1e-10, 1e-12 * smax);
    long rank = 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > thr) ++rank;
    Eigen::VectorXd x0 = svd.solve(r);
    if ((A * x0 - r).norm() > 1e-8) { out.consistent = false; return out; }
    out.consistent = true;
    out.origin = x0;
    out.basis = svd.matrixV().rightCols(2 * n - rank);
    return out;
}

double full_residual(const SecondClassInstance& inst, const std::vector<cx>& b) {
    const AbelianGroup& G = inst.G;
    const long n = G.order;
    const double sn = std::sqrt(double(n));
    const double delta = inst.delta();
    double r = 0;
    auto upd = [&](cx lhs, cx rhs) { r = std::max(r, std::abs(lhs - rhs)); };

    cx suma = 0;
    for (long x = 0; x < n; ++x) {
        suma += inst.a[x];
        upd(inst.a[G.neg(x)], inst.a[x]);
        for (long y = 0; y < n; ++y)
            upd(inst.a[G.add(x, y)] * inst.pairing.value(x, y), inst.a[x] * inst.a[y]);
    }
    upd(suma, sn / (inst.c * inst.c * inst.c));

    upd(b[0], cx(-1.0 / delta, 0.0));
    for (long x = 0; x < n; ++x) {
        cx lhs = 0;
        for (long y = 0; y < n; ++y) lhs += std::conj(inst.pairing.value(x, y)) * b[y];
        upd(lhs, sn * inst.c * std::conj(b[x]));
        upd(inst.a[x] * b[G.neg(x)], std::conj(b[x]));
    }
    for (long y = 0; y < n; ++y) {
        cx lhs = 0;
        for (long x = 0; x < n; ++x) lhs += b[G.add(x, y)] * std::conj(b[x]);
        upd(lhs, cx((y == 0 ? 1.0 : 0.0) - 1.0 / delta, 0.0));
    }
    for (long y = 0; y < n; ++y)
        for (long z = y; z < n; ++z) {
            cx lhs = 0;
            for (long x = 0; x < n; ++x) lhs += b[G.add(x, y)] * b[G.add(x, z)] * std::conj(b[x]);
            upd(lhs, std::conj(inst.pairing.value(y, z)) * b[y] * b[z] -
                         inst.c / (delta * sn));
        }
    return r;
}

namespace {

// Square Newton system: d selected norm equations |b_g(t)|^2 - 1/n in the d
// free parameters of the linear stage.
struct SquareSystem {
    const LinearStage* space;
    long n;
    std::vector<long> sel; // selected element indices (g != 0)

    Eigen::VectorXd F(const Eigen::VectorXd& t) const {
        auto b = space->b_of(t);
        Eigen::VectorXd f(sel.size());
        for (size_t i = 0; i < sel.size(); ++i)
            f[i] = std::norm(b[sel[i]]) - 1.0 / double(n);
        return f;
    }
    Eigen::MatrixXd J(const Eigen::VectorXd& t) const {
        auto b = space->b_of(t);
        long d = space->basis.cols();
        Eigen::MatrixXd j(sel.size(), d);
        for (size_t i = 0; i < sel.size(); ++i) {
            long g = sel[i];
            for (long k = 0; k < d; ++k)
                j(i, k) = 2.0 * (b[g].real() * space->basis(g, k) +
                                 b[g].imag() * space->basis(n + g, k));
        }
        return j;
    }
};

std::vector<long> select_norm_equations(const LinearStage& space, long n, std::uint64_t seed) {
    long d = space.basis.cols();
    std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ULL);
    Eigen::VectorXd t0(d);
    for (long i = 0; i < d; ++i) t0[i] = unit_box(eng);
    auto b = space.b_of(t0);
    Eigen::MatrixXd Gm(n - 1, d);
    for (long g = 1; g < n; ++g)
        for (long k = 0; k < d; ++k)
            Gm(g - 1, k) = 2.0 * (b[g].real() * space.basis(g, k) +
                                  b[g].imag() * space.basis(n + g, k));
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Gm.transpose());
    auto perm = qr.colsPermutation().indices();
    std::vector<long> sel;
    for (long i = 0; i < d && i < perm.size(); ++i) sel.push_back(perm[i] + 1);
    return sel;
}

bool newton_square(const SquareSystem& sys, Eigen::VectorXd& t, int max_iter = 80) {
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXd f = sys.F(t);
        if (f.lpNorm<Eigen::Infinity>() < 1e-13) return true;
        Eigen::MatrixXd j = sys.J(t);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
        if (!lu.isInvertible()) return false;
        Eigen::VectorXd dt = lu.solve(-f);
        double base = f.norm(), lam = 1.0;
        while (lam > 1e-4 && sys.F(t + lam * dt).norm() > base * (1.0 - 0.25 * lam)) lam *= 0.5;
        t += lam * dt;
        if (!t.allFinite()) return false;
    }
    return sys.F(t).lpNorm<Eigen::Infinity>() < 1e-13;
}

double dist_b(const std::vector<cx>& a, const std::vector<cx>& b) {
    double d = 0;
    for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

} // namespace

NormStageResult norm_stage(const LinearStage& space, const SecondClassInstance& inst,
                           const SolveOptions& opts, const std::vector<std::vector<cx>>& seeds) {
    NormStageResult out;
    if (!space.consistent) return out;
    const long n = inst.G.order;
    const long d = space.basis.cols();

    if (d == 0) {
        auto b = space.b_of(Eigen::VectorXd::Zero(0));
        double r = full_residual(inst, b);
        out.square_roots = 1;
        if (r < opts.tol) out.solutions.push_back({inst, b, r});
        return out;
    }

    SquareSystem sys{&space, n, select_norm_equations(space, n, opts.seed)};

    // initial parameter guesses: seeds first (least-squares projection), then
    // deterministic pseudo-random starts
    std::vector<Eigen::VectorXd> starts;
    for (const auto& bs : seeds) {
        Eigen::VectorXd v(2 * n);
        for (long i = 0; i < n; ++i) { v[i] = bs[i].real(); v[n + i] = bs[i].imag(); }
        starts.push_back(space.basis.transpose() * (v - space.origin));
    }
    for (long s = 0; s < opts.starts; ++s) {
        std::mt19937_64 eng(opts.seed * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL * (s + 1));
        Eigen::VectorXd t(d);
        for (long i = 0; i < d; ++i) t[i] = unit_box(eng);
        starts.push_back(std::move(t));
    }

    // run Newton over chunks in parallel; merge in start order for determinism
    int nthreads = std::max(1, opts.threads);
    std::vector<std::optional<Eigen::VectorXd>> converged(starts.size());
    auto work = [&](size_t lo, size_t hi) {
        for (size_t i = lo; i < hi; ++i) {
            Eigen::VectorXd t = starts[i];
            if (newton_square(sys, t)) converged[i] = t;
        }
    };
    if (nthreads == 1) {
        work(0, starts.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (starts.size() + nthreads - 1) / nthreads;
        for (int k = 0; k < nthreads; ++k) {
            size_t lo = k * chunk, hi = std::min(starts.size(), (k + 1) * chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::vector<cx>> roots;
    for (const auto& tc : converged) {
        if (!tc) continue;
        auto b = space.b_of(*tc);
        bool dup = false;
        for (const auto& r : roots)
            if (dist_b(r, b) < 1e-6) { dup = true; break; }
        if (!dup) roots.push_back(std::move(b));
    }
    out.square_roots = long(roots.size());
    out.parity_warning = (out.square_roots % 2) != 0;

    for (auto& b : roots) {
        double r = full_residual(inst, b);
        if (r >= opts.tol) continue;
        SecondClassSolution sol{inst, b, r};
        sol = refine(sol, opts.refine_target, 50, opts.high_precision);
        bool dup = false;
        for (const auto& s : out.solutions)
            if (dist_b(s.b, sol.b) < 1e-9) { dup = true; break; }
        if (!dup) out.solutions.push_back(std::move(sol));
    }
    return out;
}

SecondClassSolution refine(const SecondClassSolution& sol, double target, int max_iter,
                           bool high_precision) {
    if (sol.residual >= 1e-3)
        throw std::invalid_argument("refine: input residual too large");
    LinearStage space = linear_stage(sol.inst);
    if (!space.consistent) throw std::runtime_error("refine: inconsistent linear stage");
    const long n = sol.inst.G.order;
    const long d = space.basis.cols();
    Eigen::VectorXd v(2 * n);
    for (long i = 0; i < n; ++i) { v[i] = sol.b[i].real(); v[n + i] = sol.b[i].imag(); }
    Eigen::VectorXd t = space.basis.transpose() * (v - space.origin);

    SecondClassSolution best = sol;
    if (d > 0) {
        SquareSystem sys{&space, n, select_norm_equations(space, n, 12345)};
        double prev = full_residual(sol.inst, space.b_of(t));
        for (int it = 0; it < max_iter; ++it) {
            Eigen::VectorXd f = sys.F(t);
            Eigen::MatrixXd j = sys.J(t);
            Eigen::FullPivLU<Eigen::MatrixXd> lu(j);
            if (!lu.isInvertible()) break;
            Eigen::VectorXd dt = lu.solve(-f);
            t += dt;
            double r = full_residual(sol.inst, space.b_of(t));
            if (r > prev * 10 && r > 1e-6)
                throw std::runtime_error("refine: Newton diverged");
            prev = r;
            if (f.lpNorm<Eigen::Infinity>() < 1e-15) break;
        }
    }
    best.b = space.b_of(t);
    best.residual = full_residual(sol.inst, best.b);

    if (high_precision) {
        // two extra Newton steps with compensated residual evaluation on the
        // norm subsystem; improves the last bits of the double result
        dd_polish_norms(best, space);
        best.residual = full_residual(best.inst, best.b);
    }
    if (best.residual > target && best.residual > sol.residual)
        throw std::runtime_error("refine: failed to reach target residual");
    return best;
}

std::vector<std::vector<long>> merge_automorphisms(const AbelianGroup& G,
                                                   const SymmetricPairing& pairing) {
    auto auts = automorphisms(G);
    auto key = pairing.phase_table();
    bool cyclic = G.rank() == 1;
    bool two_power = true;
    for (long f : G.factors)
        while (f > 1) {
            if (f % 2) { two_power = false; break; }
            f /= 2;
        }
    auto a0 = quadratic_refinement(pairing);

    std::vector<std::vector<long>> out;
    for (auto& phi : auts) {
        if (pairing.transport(phi).phase_table() != key) continue;
        if (cyclic) {
            bool pres = true;
            for (long g = 0; g < G.order && pres; ++g)
                if (a0[phi[g]].mod1() != a0[g].mod1()) pres = false;
            if (!pres) continue;
        } else if (two_power) {
            bool is_neg = true;
            for (long g = 0; g < G.order && is_neg; ++g)
                if (phi[g] != G.neg(g)) is_neg = false;
            if (is_neg && G.neg(1 % G.order) != 1 % G.order) continue;
        }
        out.push_back(phi);
    }
    return out;
}

namespace {

// diagonal pairing orbit representatives under Aut(G), smallest m-tuples first
std::vector<std::vector<long>> diagonal_pairing_orbit_reps(const AbelianGroup& G) {
    std::vector<std::vector<long>> all;
    std::vector<long> cur(G.rank());
    auto rec = [&](auto&& self, long i) -> void {
        if (i == G.rank()) { all.push_back(cur); return; }
        for (long m = 1; m <= G.factors[i]; ++m) {
            long mm = m % G.factors[i];
            if (std::gcd(mm == 0 ? G.factors[i] : mm, G.factors[i]) != 1 && G.factors[i] > 1)
                continue;
            if (G.factors[i] == 1 && m > 1) break;
            cur[i] = (G.factors[i] == 1) ? 0 : m;
            self(self, i + 1);
            if (G.factors[i] == 1) break;
        }
    };
    rec(rec, 0);

    auto auts = automorphisms(G);
    std::set<std::vector<std::vector<Rat>>> seen;
    std::vector<std::vector<long>> reps;
    for (const auto& ms : all) {
        std::vector<long> fixed = ms;
        for (long i = 0; i < G.rank(); ++i)
            if (G.factors[i] == 1) fixed[i] = 1;
        SymmetricPairing p = SymmetricPairing::diagonal(G, fixed);
        if (seen.count(p.phase_table())) continue;
        for (const auto& phi : auts) seen.insert(p.transport(phi).phase_table());
        reps.push_back(fixed);
    }
    return reps;
}

std::vector<cx> transport_vec(const AbelianGroup& G, const std::vector<cx>& v,
                              const std::vector<long>& phi) {
    std::vector<cx> out(v.size());
    for (long g = 0; g < G.order; ++g) out[g] = v[phi[g]];
    return out;
}

} // namespace

std::vector<ClassRecord> classify(const AbelianGroup& G, const SolveOptions& opts,
                                  long max_order) {
    if (G.order > max_order)
        throw std::invalid_argument("classify: |G| exceeds the configured bound");

    std::vector<ClassRecord> classes;
    auto reps = diagonal_pairing_orbit_reps(G);
    for (const auto& ms : reps) {
        SymmetricPairing pairing = SymmetricPairing::diagonal(G, ms);
        auto stab = merge_automorphisms(G, pairing);
        auto acands = a_candidates(G, pairing);
        std::vector<SecondClassSolution> sols;
        for (size_t ai = 0; ai < acands.size(); ++ai) {
            auto cs = c_candidates(G, acands[ai]);
            for (size_t ci = 0; ci < cs.size(); ++ci) {
                SecondClassInstance inst{G, pairing, acands[ai], cs[ci], long(ai), int(ci)};
                auto space = linear_stage(inst);
                if (!space.consistent) continue;
                auto res = norm_stage(space, inst, opts);
                for (auto& s : res.solutions) sols.push_back(std::move(s));
            }
        }
        // merge under the allowed automorphism transports
        std::vector<std::vector<SecondClassSolution>> orbits;
        for (auto& s : sols) {
            bool merged = false;
            for (auto& orb : orbits) {
                const auto& r = orb.front();
                if (std::abs(r.inst.c - s.inst.c) > 1e-6) continue;
                for (const auto& phi : stab) {
                    auto ta = transport_vec(G, s.inst.a, phi);
                    auto tb = transport_vec(G, s.b, phi);
                    if (dist_b(ta, r.inst.a) < 1e-6 && dist_b(tb, r.b) < 1e-6) {
                        merged = true;
                        break;
                    }
                }
                if (merged) { orb.push_back(s); break; }
            }
            if (!merged) orbits.push_back({s});
        }
        for (auto& orb : orbits) {
            ClassRecord rec;
            rec.rep = orb.front();
            rec.pairing_ms = ms;
            auto psi = two_torsion_characters(G)[rec.rep.inst.psi_index];
            for (long i = 0; i < G.rank(); ++i) {
                std::vector<long> r(G.rank(), 0);
                r[i] = 1;
                rec.psi_signs.push_back(
                    psi.value(G, G.index(r)).real() > 0 ? 1 : -1);
            }
            rec.provenance = "discovered";
            classes.push_back(std::move(rec));
        }
    }

    // deterministic ordering and ids
    std::sort(classes.begin(), classes.end(), [](const ClassRecord& x, const ClassRecord& y) {
        if (x.pairing_ms != y.pairing_ms) return x.pairing_ms < y.pairing_ms;
        double ax = std::arg(x.rep.inst.c), ay = std::arg(y.rep.inst.c);
        if (std::abs(ax - ay) > 1e-9) return ax < ay;
        for (size_t i = 0; i < x.rep.b.size(); ++i) {
            double dx = std::arg(x.rep.b[i]), dy = std::arg(y.rep.b[i]);
            if (std::abs(dx - dy) > 1e-7) return dx < dy;
        }
        return false;
    });
    for (size_t i = 0; i < classes.size(); ++i) classes[i].class_id = int(i);

    // conjugation closure bookkeeping: conj maps classes to classes
    auto auts = automorphisms(G);
    for (size_t i = 0; i < classes.size(); ++i) {
        const auto& ci = classes[i];
        std::vector<cx> ca(G.order), cb(G.order);
        for (long g = 0; g < G.order; ++g) {
            ca[g] = std::conj(ci.rep.inst.a[g]);
            cb[g] = std::conj(ci.rep.b[g]);
        }
        cx cc = std::conj(ci.rep.inst.c);
        for (size_t j = 0; j < classes.size() && ci.conjugate_of < 0; ++j) {
            const auto& cj = classes[j];
            if (std::abs(cc - cj.rep.inst.c) > 1e-6) continue;
            for (const auto& phi : auts) {
                auto key = cj.rep.inst.pairing.phase_table();
                // conjugate pairing has exponent matrix -B
                SymmetricPairing cp = ci.rep.inst.pairing;
                for (auto& row : cp.B)
                    for (auto& v : row) v = (-v).mod1();
                if (cp.transport(phi).phase_table() != key) continue;
                auto ta = transport_vec(G, ca, phi);
                auto tb = transport_vec(G, cb, phi);
                if (dist_b(ta, cj.rep.inst.a) < 1e-5 && dist_b(tb, cj.rep.b) < 1e-5) {
                    classes[i].conjugate_of = cj.class_id;
                    break;
                }
            }
        }
    }
    return classes;
}

} // namespace ng
