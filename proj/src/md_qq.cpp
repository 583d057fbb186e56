#include "ng/md_qq.hpp"

#include <stdexcept>

#include "ng/numtheory.hpp"

namespace ng {

std::vector<long> gamma_orbit_reps(const AbelianGroup& Gp) {
    std::vector<long> reps;
    std::vector<char> used(Gp.order, 0);
    used[0] = 1;
    for (long g = 1; g < Gp.order; ++g) {
        if (used[g]) continue;
        reps.push_back(g);
        used[g] = 1;
        used[Gp.neg(g)] = 1;
    }
    return reps;
}

namespace {

struct QQContext {
    AbelianGroup G, Gp;
    long n;
    double delta, lambda;
    std::vector<Rat> Q, Qp;     // form values
    std::vector<std::vector<Rat>> BQ, BQp; // bilinear phases of the raw form pairings

    Rat P(long g, long h) const {
        // <g,h> = <g,h>_Q^{(n+1)/2}
        return (BQ[g][h] * ((n + 1) / 2)).mod1();
    }
};

std::vector<std::vector<Rat>> bilinear_table(const AbelianGroup& G, const std::vector<Rat>& Q) {
    std::vector<std::vector<Rat>> B(G.order, std::vector<Rat>(G.order));
    for (long g = 0; g < G.order; ++g)
        for (long h = 0; h < G.order; ++h)
            B[g][h] = (Q[G.add(g, h)] - Q[g] - Q[h]).mod1();
    return B;
}

std::vector<Label> qq_labels(const AbelianGroup& G, const AbelianGroup& Gp) {
    std::vector<Label> labels;
    long n = G.order;
    for (long g = 0; g < n; ++g) labels.push_back({"a", {g}});
    for (long h = 0; h < n; ++h) labels.push_back({"b", {h}});
    for (long k = 0; k < n; ++k)
        for (long l = k + 1; l < n; ++l) labels.push_back({"c", {k, l}});
    for (long m = 0; m < n; ++m)
        for (long gam : gamma_orbit_reps(Gp)) labels.push_back({"d", {m, gam}});
    return labels;
}

} // namespace

MdQQ md_qq(const QuadraticForm& Q, const QuadraticForm& Qp) {
    QQContext ctx;
    ctx.G = Q.G;
    ctx.Gp = Qp.G;
    ctx.n = ctx.G.order;
    if (ctx.n % 2 == 0 || ctx.Gp.order % 2 == 0 || ctx.Gp.order != ctx.n + 4)
        throw std::invalid_argument("md_qq: |G| odd and |G'| = |G|+4 odd required");
    if (!Q.nondegenerate() || !Qp.nondegenerate())
        throw std::invalid_argument("md_qq: forms must be nondegenerate");
    double n = double(ctx.n);
    ctx.delta = (n + std::sqrt(n * n + 4 * n)) / 2.0;
    ctx.lambda = n + ctx.delta * ctx.delta;
    ctx.Q = Q.values;
    ctx.Qp = Qp.values;
    ctx.BQ = bilinear_table(ctx.G, ctx.Q);
    ctx.BQp = bilinear_table(ctx.Gp, ctx.Qp);

    MdQQ out;
    out.gauss_product = gauss_sum(Q, 1) * gauss_sum(Qp, 1);
    out.gauss_ok = std::abs(out.gauss_product - cx(-1, 0)) < 1e-10;

    ModularData& md = out.md;
    md.labels = qq_labels(ctx.G, ctx.Gp);
    md.lambda = ctx.lambda;
    const long L = long(md.labels.size());
    md.S.resize(L, L);
    md.T.resize(L);
    md.id_index = 0; // a_0

    auto P = [&](long g, long h) { return unit_phase(ctx.P(g, h)); };
    const auto& G = ctx.G;
    const auto& Gp = ctx.Gp;
    const double delta = ctx.delta;

    for (long i = 0; i < L; ++i) {
        const Label& l = md.labels[i];
        if (l.family == "a" || l.family == "b") md.T[i] = P(l.params[0], l.params[0]);
        else if (l.family == "c") md.T[i] = P(l.params[0], l.params[1]);
        else md.T[i] = P(l.params[0], l.params[0]) * unit_phase(ctx.Qp[l.params[1]]);
    }

    for (long i = 0; i < L; ++i) {
        const Label& x = md.labels[i];
        for (long j = 0; j < L; ++j) {
            const Label& y = md.labels[j];
            cx v = 0;
            const std::string& f1 = x.family;
            const std::string& f2 = y.family;
            if (f1 == "a" && f2 == "a")
                v = std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if ((f1 == "a" && f2 == "b") || (f1 == "b" && f2 == "a"))
                v = (delta + 1) *
                    std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if (f1 == "b" && f2 == "b")
                v = std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if ((f1 == "a" || f1 == "b") && f2 == "c")
                v = (delta + 2) * std::conj(P(x.params[0], G.add(y.params[0], y.params[1])));
            else if (f1 == "c" && (f2 == "a" || f2 == "b"))
                v = (delta + 2) * std::conj(P(G.add(x.params[0], x.params[1]), y.params[0]));
            else if (f1 == "c" && f2 == "c")
                v = (delta + 2) *
                    (std::conj(P(x.params[0], y.params[0]) * P(x.params[1], y.params[1])) +
                     std::conj(P(x.params[0], y.params[1]) * P(x.params[1], y.params[0])));
            else if (f1 == "a" && f2 == "d")
                v = delta * std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if (f1 == "d" && f2 == "a")
                v = delta * std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if (f1 == "b" && f2 == "d")
                v = -delta * std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if (f1 == "d" && f2 == "b")
                v = -delta * std::conj(P(x.params[0], y.params[0]) * P(x.params[0], y.params[0]));
            else if ((f1 == "c" && f2 == "d") || (f1 == "d" && f2 == "c"))
                v = 0;
            else {
                // dd-block: raw form pairings of both groups
                cx m_part = std::conj(unit_phase(ctx.BQ[x.params[0]][y.params[0]]));
                cx g_part = unit_phase(ctx.BQp[x.params[1]][y.params[1]]);
                v = -delta * m_part * (g_part + std::conj(g_part));
            }
            md.S(i, j) = v / ctx.lambda;
        }
    }
    return out;
}

ModularData md_point(const QuadraticForm& Q, int alpha, cx beta) {
    if (alpha != 1 && alpha != -1) throw std::invalid_argument("md_point: alpha must be +-1");
    cx expect = double(alpha) * gauss_sum(Q, 1);
    if (std::abs(beta * beta * beta - expect) > 1e-9)
        throw std::invalid_argument("md_point: beta^3 != alpha * alpha_Q(1)");
    const AbelianGroup& G = Q.G;
    ModularData md;
    for (long g = 0; g < G.order; ++g) md.labels.push_back({"a", {g}});
    md.id_index = 0;
    md.lambda = double(G.order);
    md.S.resize(G.order, G.order);
    md.T.resize(G.order);
    auto bil = bilinear_table(G, Q.values);
    double rn = std::sqrt(double(G.order));
    for (long g = 0; g < G.order; ++g) {
        md.T[g] = beta * unit_phase(Q.values[g]);
        for (long h = 0; h < G.order; ++h)
            md.S(g, h) = double(alpha) / rn * std::conj(unit_phase(bil[g][h]));
    }
    return md;
}

FusionTensor fusion_closed_form(const AbelianGroup& G, const AbelianGroup& Gp) {
    if (G.order % 2 == 0 || Gp.order != G.order + 4)
        throw std::invalid_argument("fusion_closed_form: |G| odd, |G'|=|G|+4 required");
    auto labels = qq_labels(G, Gp);
    const long L = long(labels.size());
    FusionTensor out;
    out.size = L;
    out.N.assign(L * L * L, 0);

    auto z = [&](long g) { return g == G.zero() ? 1 : 0; };
    auto zp = [&](long g) { return g == Gp.zero() ? 1 : 0; };
    auto addG = [&](long a, long b) { return G.add(a, b); };

    auto value = [&](const Label& A, const Label& B, const Label& C) -> long {
        // normalize family order alphabetically, carrying the labels along
        const Label* l[3] = {&A, &B, &C};
        std::sort(l, l + 3, [](const Label* x, const Label* y) { return x->family < y->family; });
        const Label &x = *l[0], &y = *l[1], &w = *l[2];
        std::string key = x.family + y.family + w.family;
        auto p = [&](const Label& q, int i) { return q.params[i]; };
        if (key == "aaa" || key == "abb" || key == "bbb")
            return z(addG(addG(p(x, 0), p(y, 0)), p(w, 0)));
        if (key == "bbd")
            return z(addG(addG(p(x, 0), p(y, 0)), p(w, 0)));
        if (key == "acc") {
            long g = p(x, 0), h = p(y, 0), k = p(y, 1), hp = p(w, 0), kp = p(w, 1);
            return z(addG(addG(g, h), hp)) * z(addG(addG(g, k), kp)) +
                   z(addG(addG(g, h), kp)) * z(addG(addG(g, hp), k));
        }
        if (key == "add") {
            long g = p(x, 0), h = p(y, 0), k = p(w, 0);
            return z(addG(addG(g, h), k)) * (p(y, 1) == p(w, 1) ? 1 : 0);
        }
        if (key == "bbc") {
            long g = p(x, 0), h = p(y, 0), k = p(w, 0), kp = p(w, 1);
            return z(addG(addG(addG(g, g), addG(h, h)), addG(k, kp)));
        }
        if (key == "bcd") {
            long g = p(x, 0), k = p(y, 0), kp = p(y, 1), h = p(w, 0);
            return z(addG(addG(addG(g, g), addG(h, h)), addG(k, kp)));
        }
        if (key == "bcc") {
            long g = p(x, 0), h = p(y, 0), k = p(y, 1), hp = p(w, 0), kp = p(w, 1);
            long two_g = addG(g, g);
            return z(addG(addG(two_g, addG(h, k)), addG(hp, kp))) +
                   z(addG(addG(g, h), hp)) * z(addG(addG(g, k), kp)) +
                   z(addG(addG(g, h), kp)) * z(addG(addG(g, hp), k));
        }
        if (key == "bdd") {
            long g = p(x, 0), h = p(y, 0), k = p(w, 0);
            return z(addG(addG(g, h), k)) * (p(y, 1) == p(w, 1) ? 0 : 1);
        }
        if (key == "ccd") {
            long g = p(x, 0), h = p(x, 1), gp = p(y, 0), hp = p(y, 1), k = p(w, 0);
            return z(addG(addG(addG(g, h), addG(gp, hp)), addG(k, k)));
        }
        if (key == "cdd") {
            long g = p(x, 0), h = p(x, 1), k = p(y, 0), kp = p(w, 0);
            return z(addG(addG(g, h), addG(addG(k, k), addG(kp, kp))));
        }
        if (key == "ccc") {
            long g = p(x, 0), h = p(x, 1), gp = p(y, 0), hp = p(y, 1), gpp = p(w, 0),
                 hpp = p(w, 1);
            long total = addG(addG(addG(g, h), addG(gp, hp)), addG(gpp, hpp));
            if (!z(total)) return 0;
            return 1 + z(addG(addG(g, gp), gpp)) + z(addG(addG(g, hp), gpp)) +
                   z(addG(addG(g, gp), hpp)) + z(addG(addG(g, hp), hpp));
        }
        if (key == "ddd") {
            long g = p(x, 0), gp = p(y, 0), gpp = p(w, 0);
            if (!z(addG(addG(g, gp), gpp))) return 0;
            long c1 = p(x, 1), c2 = p(y, 1), c3 = p(w, 1);
            int sub = zp(Gp.add(Gp.add(c1, c2), c3)) + zp(Gp.add(Gp.sub(c1, c2), c3)) +
                      zp(Gp.sub(Gp.add(c1, c2), c3)) + zp(Gp.sub(Gp.sub(c1, c2), c3));
            return 1 - sub;
        }
        return 0;
    };

    for (long a = 0; a < L; ++a)
        for (long b = a; b < L; ++b)
            for (long c = b; c < L; ++c) {
                long v = value(labels[a], labels[b], labels[c]);
                long idx[3] = {a, b, c};
                long perm[6][3] = {{idx[0], idx[1], idx[2]}, {idx[0], idx[2], idx[1]},
                                   {idx[1], idx[0], idx[2]}, {idx[1], idx[2], idx[0]},
                                   {idx[2], idx[0], idx[1]}, {idx[2], idx[1], idx[0]}};
                for (auto& q : perm) out.N[(q[0] * L + q[1]) * L + q[2]] = v;
            }
    return out;
}

GaloisReport galois_check(const QuadraticForm& Q, const QuadraticForm& Qp, long ell) {
    GaloisReport rep;
    rep.ell = ell;
    const AbelianGroup& G = Q.G;
    const AbelianGroup& Gp = Qp.G;
    long n = G.order;
    long N = n * (n + 4);
    if (std::gcd(ell % N, N) != 1)
        throw std::invalid_argument("galois_check: ell must be coprime to n(n+4)");
    rep.jacobi = jacobi_symbol(ell, N);

    auto base = md_qq(Q, Qp);
    // Galois image: xi -> xi^ell on both groups, delta -> (n + j sqrt(n^2+4n))/2
    auto gal = md_qq(QuadraticForm::from_values(G, Q.scaled(ell).values),
                     QuadraticForm::from_values(Gp, Qp.scaled(ell).values));
    double nn = double(n);
    double delta_g = (nn + rep.jacobi * std::sqrt(nn * nn + 4 * nn)) / 2.0;
    double lambda_g = nn + delta_g * delta_g;
    // rebuild the Galois-conjugate S with the conjugated delta and lambda;
    // entries of md_qq are (coef in {1,delta+1,delta+2,delta,-delta}) * phase
    const ModularData& md = base.md;
    const long L = md.size();
    Eigen::MatrixXcd Sg(L, L);
    {
        const ModularData& mg = gal.md;
        for (long i = 0; i < L; ++i)
            for (long j = 0; j < L; ++j) {
                cx v = mg.S(i, j) * mg.lambda; // coef(delta) * phase
                // decompose against the known coefficient by family pair
                const std::string& f1 = md.labels[i].family;
                const std::string& f2 = md.labels[j].family;
                double coef = 1.0, coef_g = 1.0;
                double d0 = (nn + std::sqrt(nn * nn + 4 * nn)) / 2.0;
                if ((f1 == "a" && f2 == "b") || (f1 == "b" && f2 == "a")) {
                    coef = d0 + 1;
                    coef_g = delta_g + 1;
                } else if (f1 == "c" || f2 == "c") {
                    if (f1 == "c" && f2 == "c") { coef = d0 + 2; coef_g = delta_g + 2; }
                    else if (f2 == "d" || f1 == "d") { coef = 1; coef_g = 1; }
                    else { coef = d0 + 2; coef_g = delta_g + 2; }
                } else if (f1 == "d" || f2 == "d") {
                    coef = d0;
                    coef_g = delta_g;
                }
                if (f1 == "c" && f2 == "c") {
                    // sum of two phases times (delta+2): scale the whole entry
                    Sg(i, j) = v / (d0 + 2) * (delta_g + 2) / lambda_g;
                } else {
                    Sg(i, j) = v / coef * coef_g / lambda_g;
                }
            }
    }

    // claimed permutation and parities
    auto reps = gamma_orbit_reps(Gp);
    auto rep_of = [&](long g) {
        for (long r : reps)
            if (r == g || Gp.neg(r) == g) return r;
        return -1L;
    };
    auto scale = [&](const AbelianGroup& H, long g) {
        long x = 0;
        long e = ((ell % H.order) + H.order) % H.order;
        for (long t = 0; t < e; ++t) x = H.add(x, g);
        return x;
    };
    std::vector<long> sigma(L);
    std::vector<double> parity(L, 1.0);
    for (long i = 0; i < L; ++i) {
        const Label& l = md.labels[i];
        Label img;
        if (l.family == "a" || l.family == "b") {
            img.family = (rep.jacobi == 1) ? l.family : (l.family == "a" ? "b" : "a");
            img.params = {scale(G, l.params[0])};
        } else if (l.family == "c") {
            long k = scale(G, l.params[0]), m = scale(G, l.params[1]);
            img.family = "c";
            img.params = {std::min(k, m), std::max(k, m)};
        } else {
            img.family = "d";
            img.params = {scale(G, l.params[0]), rep_of(scale(Gp, l.params[1]))};
            parity[i] = rep.jacobi;
        }
        long j = md.find_label(img);
        if (j < 0) { rep.ok = false; rep.failures.push_back("sigma image missing: " + img.str()); return rep; }
        sigma[i] = j;
    }

    double err = 0;
    for (long i = 0; i < L; ++i)
        for (long j = 0; j < L; ++j)
            err = std::max(err, std::abs(Sg(i, j) - parity[i] * md.S(sigma[i], j)));
    if (err > 1e-8) {
        rep.ok = false;
        rep.failures.push_back("Galois relation residual " + std::to_string(err));
    }
    return rep;
}

} // namespace ng
