#include "ng/md_first.hpp"

#include <stdexcept>

namespace ng {

namespace {

cx mu(const FirstClassSolution& s, long x) { return s.bval(x).value(); }

// b''-type factor conj(b''(sigma^2 y, sigma y)) at y, or 1 when y leaves the
// domain (see Corollary 6 derivation; terms at the removed points drop out).
cx phi_factor(const FirstClassSolution& sol, long y) {
    const FiniteField& F = *sol.F;
    if (y == 0 || y == 1) return 1.0;
    long u = F.sigma_inv(y), v = F.sigma(y);
    if (F.mul(u, v) == 1) return 1.0;
    return std::conj(sol.bppval(u, v).value());
}

} // namespace

double zeta_residual(const FirstClassSolution& sol, const ZetaVector& z) {
    const FiniteField& F = *sol.F;
    auto dom = F.punctured();
    double r = 0;
    auto upd = [&](cx lhs, cx rhs) { r = std::max(r, std::abs(lhs - rhs)); };
    cx sm(sol.s, 0);

    // zeta_1^2 = s when n+1 even
    if (F.q() % 2 == 0) upd(z.zeta1 * z.zeta1, sm);
    // zeta_2 = conj(zeta_1) (char != 2 only; in char 2 the element 2 is 0)
    if (F.p() != 2) upd(z.zeta[F.add(1, 1)], std::conj(z.zeta1));
    for (long x : dom) {
        // zeta_{conj x} = s a_x b_x zeta_1 conj(zeta_x)
        upd(z.zeta[F.inv(x)],
            sm * sol.aval(x).value() * mu(sol, x) * z.zeta1 * std::conj(z.zeta[x]));
        // zeta_{sigma(-conj sigma x)} = conj(b_x) b_{-sigma x} zeta_1 zeta_x b''(x, sigma^2 x)
        long msx = F.neg(F.sigma(x));
        if (msx != 0 && msx != 1 && F.mul(x, F.sigma_inv(x)) != 1) {
            long target = F.sigma(F.neg(F.inv(F.sigma(x))));
            upd(z.zeta[target], std::conj(mu(sol, x)) * mu(sol, msx) * z.zeta1 * z.zeta[x] *
                                    sol.bppval(x, F.sigma_inv(x)).value());
        }
        // pair equation for (x, w), w outside {conj x, sigma^2(-sigma x)}
        for (long w : dom) {
            if (w == F.inv(x)) continue;
            long ms = F.neg(F.sigma(x));
            if (ms != 0 && ms != 1 && w == F.sigma_inv(ms)) continue;
            long su = F.neg(F.mul(F.inv(F.sigma(x)), F.sigma(w)));
            long sy = F.mul(F.inv(F.sigma_inv(w)), F.inv(F.sigma(x)));
            if (su == 0 || su == 1 || sy == 0 || sy == 1) continue;
            long u = F.sigma_inv(su);
            long uw = F.mul(u, F.sigma(w));
            if (uw == 0 || uw == 1) continue;
            long v = F.sigma_inv(uw);
            long y = F.sigma_inv(sy);
            long target_arg =
                F.mul(F.neg(F.inv(F.mul(F.sigma(w), F.sigma(x)))), F.sigma(F.mul(x, w)));
            if (target_arg == 0 || target_arg == 1) continue;
            long target = F.sigma(target_arg);
            auto bpp_or = [&](long p, long q2) -> cx {
                if (p == 0 || p == 1 || q2 == 0 || q2 == 1 || F.mul(p, q2) == 1) return 1.0;
                return sol.bppval(p, q2).value();
            };
            cx rhs = z.zeta[x] * z.zeta[w] * bpp_or(u, v) * std::conj(bpp_or(w, y)) *
                     bpp_or(F.inv(F.sigma_inv(w)), y);
            upd(z.zeta[target], rhs);
        }
    }
    return r;
}

std::vector<ZetaVector> solve_zeta(const FirstClassSolution& sol) {
    const FiniteField& F = *sol.F;
    long q = F.q(), n = q - 1;
    bool canonical = true;
    for (long x : F.punctured())
        if (sol.bval(x) != Mu6::one()) canonical = false;
    for (auto& [k, v] : sol.bpp)
        if (v != Mu6::one()) canonical = false;
    if (!(canonical && sol.s == 1) && n > 3)
        throw std::invalid_argument("solve_zeta: commutative case requires s=omega=1 or n<=3");

    // particular solution
    ZetaVector part;
    part.zeta.assign(q, cx(1, 0));
    part.zeta1 = 1;
    if (canonical && sol.s == 1) {
        // all ones
    } else if (n == 1) {
        part.zeta1 = (sol.s == 1) ? cx(1, 0) : cx(0, 1);
    } else if (n == 2) {
        // b(-1) = omega^{+-1}: zeta1 = e^{-+ 2 pi i/9}
        bool plus = sol.bval(2) == Mu6::omega();
        part.zeta1 = unit_phase(Rat(plus ? -1 : 1, 9));
        part.zeta[2] = std::conj(part.zeta1);
    } else if (n == 3 && sol.s == -1) {
        // zeta_1 = zeta_{omega^2} = i, zeta_omega = 1 where a(omega)=1
        long om = 0;
        for (long x : F.punctured())
            if (sol.aval(x) == Mu6::one()) om = x;
        long om2 = F.inv(om);
        part.zeta1 = cx(0, 1);
        part.zeta[om] = 1;
        part.zeta[om2] = cx(0, 1);
    } else {
        throw std::invalid_argument("solve_zeta: no particular solution catalogued");
    }

    std::vector<ZetaVector> out;
    for (long t = 0; t < q; ++t) {
        ZetaVector z = part;
        z.zeta1 = part.zeta1 * F.add_char(t, 1);
        for (long x : F.punctured()) z.zeta[x] = part.zeta[x] * F.add_char(t, F.sigma(x));
        double r = zeta_residual(sol, z);
        if (r > 1e-9)
            throw std::runtime_error("solve_zeta: candidate fails projection equations, residual " +
                                     std::to_string(r));
        out.push_back(std::move(z));
    }
    return out;
}

ModularData md_first_class(const FirstClassSolution& sol, const std::vector<ZetaVector>& zetas) {
    const FiniteField& F = *sol.F;
    const long q = F.q(), n = q - 1;
    const bool special = (sol.s == -1 && n == 7);
    if (!special && long(zetas.size()) != q)
        throw std::invalid_argument("md_first_class: need the n+1 zeta vectors");

    auto dom = F.punctured();
    // group elements of G = F^x listed as generator powers for stable label order
    std::vector<long> gelts;
    for (long e = 0; e < n; ++e) gelts.push_back(F.exp(e));

    ModularData md;
    for (long g : gelts) md.labels.push_back({"g", {g}});
    md.labels.push_back({"Sigma", {}});
    for (long w : dom)
        for (long h : gelts) md.labels.push_back({"wh", {w, h}});
    if (special) {
        md.labels.push_back({"rho", {+1}});
        md.labels.push_back({"rho", {-1}});
    } else {
        for (long t = 0; t < q; ++t) md.labels.push_back({"rho", {t}});
    }
    const long L = long(md.labels.size());
    md.lambda = double(n) * double(n + 1);
    md.id_index = 0; // g = generator^0 = 1 in F^x, the group identity
    md.S.resize(L, L);
    md.T.resize(L);

    // multiplicative characters of G = F^x: w(h) = e^{2 pi i log(w) log(h) / n}
    auto wval = [&](long w, long h) {
        if (n == 1) return cx(1, 0);
        return unit_phase(Rat(F.log(w) * F.log(h), n));
    };
    auto psi = [&](long t, long x) { return F.add_char(t, x); };

    // rho-rho block coefficients (see decisions ledger: reconstructed from the
    // product derivation; E_z carries the b/b'' corrections, with the s sign)
    cx E1 = 0;
    std::vector<cx> Ez(q, cx(0, 0));
    if (!special) {
        const ZetaVector& z = zetas.front(); // particular-family base: use any;
        // the psi-family is explicit in the S formula, so use the particular
        // part shared by all: recover it from zetas[0] with psi_t=0 (t=0 term)
        E1 = std::conj(z.zeta1 * z.zeta1);
        for (long x : dom) {
            long w = F.sigma_inv(F.inv(F.sigma(x)));
            cx val = double(sol.s) * std::conj(z.zeta[x] * z.zeta[w]) * mu(sol, x) *
                     std::conj(mu(sol, w)) * phi_factor(sol, F.neg(F.inv(F.sigma(x)))) *
                     phi_factor(sol, F.neg(F.sigma(w)));
            Ez[x] = val;
        }
    }

    for (long i = 0; i < L; ++i) {
        const Label& l = md.labels[i];
        if (l.family == "g" || l.family == "Sigma") md.T[i] = 1;
        else if (l.family == "wh") md.T[i] = std::conj(wval(l.params[0], l.params[1]));
        else if (special) md.T[i] = cx(0, double(l.params[0]));
        else md.T[i] = std::conj(zetas.front().zeta1 * psi(l.params[0], 1));
    }

    auto entry = [&](const Label& x, const Label& y) -> cx {
        const std::string &f1 = x.family, &f2 = y.family;
        double nn = double(n);
        if (f1 == "g" && f2 == "g") return 1.0 / nn;
        if ((f1 == "g" && f2 == "Sigma") || (f1 == "Sigma" && f2 == "g")) return 1.0;
        if (f1 == "g" && f2 == "wh") return wval(y.params[0], x.params[0]) * (nn + 1) / nn;
        if (f1 == "wh" && f2 == "g") return wval(x.params[0], y.params[0]) * (nn + 1) / nn;
        if ((f1 == "g" && f2 == "rho") || (f1 == "rho" && f2 == "g")) return special ? 2.0 : 1.0;
        if (f1 == "Sigma" && f2 == "Sigma") return nn;
        if ((f1 == "Sigma" && f2 == "wh") || (f1 == "wh" && f2 == "Sigma")) return 0.0;
        if ((f1 == "Sigma" && f2 == "rho") || (f1 == "rho" && f2 == "Sigma"))
            return special ? -2.0 : -1.0;
        if (f1 == "wh" && f2 == "wh")
            return (nn + 1) / nn * wval(y.params[0], x.params[1]) * wval(x.params[0], y.params[1]);
        if ((f1 == "wh" && f2 == "rho") || (f1 == "rho" && f2 == "wh")) return 0.0;
        // rho-rho
        if (special) return -4.0 * double(x.params[0]) * double(y.params[0]);
        long t1 = x.params[0], t2 = y.params[0];
        cx acc = E1 * std::conj(psi(t1, 1)) * std::conj(psi(t2, 1));
        for (long zz : dom) {
            long sx = F.sigma(zz);
            acc += Ez[zz] * std::conj(psi(t1, sx)) * std::conj(psi(t2, F.inv(sx)));
        }
        return acc;
    };
    for (long i = 0; i < L; ++i)
        for (long j = 0; j < L; ++j)
            md.S(i, j) = entry(md.labels[i], md.labels[j]) / double(n + 1);
    return md;
}

ModularData md_first_class_canonical(long q) {
    auto sol = canonical_first_class(q);
    return md_first_class(sol, solve_zeta(sol));
}

} // namespace ng
