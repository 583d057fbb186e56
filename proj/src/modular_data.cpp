#include "ng/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ng {

std::string Label::str() const {
    std::string s = family;
    if (!params.empty()) {
        s += "(";
        for (size_t i = 0; i < params.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(params[i]);
        }
        s += ")";
    }
    return s;
}

long ModularData::find_label(const Label& l) const {
    for (long i = 0; i < size(); ++i)
        if (labels[i] == l) return i;
    return -1;
}

AxiomReport verify_axioms(const ModularData& md, double tol, long t_order_cap) {
    AxiomReport rep;
    const long L = md.size();
    const auto& S = md.S;
    auto fail = [&](double v, double lim, const std::string& what) {
        if (v > lim) { rep.ok = false; rep.failures.push_back(what); }
    };

    rep.s_unitary = (S * S.adjoint() - Eigen::MatrixXcd::Identity(L, L)).cwiseAbs().maxCoeff();
    fail(rep.s_unitary, tol, "S not unitary");
    rep.s_symmetric = (S - S.transpose()).cwiseAbs().maxCoeff();
    fail(rep.s_symmetric, tol, "S not symmetric");

    Eigen::MatrixXcd C = S * S;
    double perm_err = 0;
    std::vector<long> cperm(L, -1);
    for (long i = 0; i < L; ++i) {
        long arg = -1;
        double best = 0;
        for (long j = 0; j < L; ++j) {
            double v = std::abs(C(i, j));
            if (v > best) { best = v; arg = j; }
        }
        cperm[i] = arg;
        for (long j = 0; j < L; ++j) {
            double target = (j == arg) ? 1.0 : 0.0;
            perm_err = std::max(perm_err, std::abs(C(i, j) - cx(target, 0)));
        }
    }
    rep.c_permutation = perm_err;
    fail(perm_err, tol, "S^2 not a permutation matrix");
    double invol = 0;
    for (long i = 0; i < L; ++i) invol = std::max(invol, double(cperm[cperm[i]] != i));
    rep.c_involution = invol;
    fail(invol, 0.5, "C^2 != I");

    Eigen::MatrixXcd ST = S * md.T.asDiagonal();
    rep.st_cubed = (ST * ST * ST - C).cwiseAbs().maxCoeff();
    fail(rep.st_cubed, tol, "(ST)^3 != S^2");

    rep.t_order = 0;
    for (long k = 1; k <= t_order_cap; ++k) {
        bool all1 = true;
        for (long i = 0; i < L && all1; ++i) {
            double ang = std::arg(md.T[i]) * k;
            cx tk = std::polar(1.0, ang);
            if (std::abs(tk - cx(1, 0)) > 1e-6) all1 = false;
        }
        if (all1) { rep.t_order = k; break; }
    }
    if (rep.t_order == 0) { rep.ok = false; rep.failures.push_back("T order exceeds cap"); }

    rep.s_row_positive = true;
    for (long a = 0; a < L; ++a)
        if (!(S(a, md.id_index).real() > tol) || std::abs(S(a, md.id_index).imag()) > tol)
            rep.s_row_positive = false;
    if (!rep.s_row_positive) { rep.ok = false; rep.failures.push_back("S_{a,0} not positive"); }

    auto fus = verlinde(md);
    rep.verlinde_error = fus.max_round_error;
    rep.verlinde_min = double(fus.min_entry);
    if (fus.max_round_error > 1e-6 || fus.min_entry < 0) {
        rep.ok = false;
        rep.failures.push_back("Verlinde integrality/positivity fails");
    }

    if (md.lambda > 0) {
        rep.lambda_error = std::abs(1.0 / std::norm(S(md.id_index, md.id_index)) - md.lambda);
        fail(rep.lambda_error, 1e-6 * md.lambda, "1/S00^2 != lambda");
    }
    return rep;
}

FusionTensor verlinde(const ModularData& md) {
    const long L = md.size();
    FusionTensor out;
    out.size = L;
    out.N.assign(L * L * L, 0);
    out.min_entry = 0;
    // N_abc = sum_d S_ad S_bd S_cd / S_0d
    Eigen::MatrixXcd W = md.S; // rows: primaries, cols: d
    Eigen::VectorXcd invRow(L);
    for (long d = 0; d < L; ++d) invRow[d] = 1.0 / md.S(md.id_index, d);
    for (long a = 0; a < L; ++a)
        for (long b = a; b < L; ++b)
            for (long c = b; c < L; ++c) {
                cx acc = 0;
                for (long d = 0; d < L; ++d) acc += W(a, d) * W(b, d) * W(c, d) * invRow[d];
                double rr = std::round(acc.real());
                double err = std::max(std::abs(acc.real() - rr), std::abs(acc.imag()));
                out.max_round_error = std::max(out.max_round_error, err);
                long v = long(rr);
                out.min_entry = std::min(out.min_entry, v);
                long idx[3] = {a, b, c};
                std::sort(idx, idx + 3);
                long p[6][3] = {{idx[0], idx[1], idx[2]}, {idx[0], idx[2], idx[1]},
                                {idx[1], idx[0], idx[2]}, {idx[1], idx[2], idx[0]},
                                {idx[2], idx[0], idx[1]}, {idx[2], idx[1], idx[0]}};
                for (auto& q : p) out.N[(q[0] * L + q[1]) * L + q[2]] = v;
            }
    return out;
}

std::vector<long> charge_conjugation(const ModularData& md) {
    Eigen::MatrixXcd C = md.S * md.S;
    const long L = md.size();
    std::vector<long> perm(L, -1);
    for (long i = 0; i < L; ++i) {
        long arg = -1;
        for (long j = 0; j < L; ++j)
            if (std::abs(C(i, j) - cx(1, 0)) < 1e-6) { arg = j; break; }
        if (arg < 0) throw std::runtime_error("charge_conjugation: S^2 not a permutation");
        perm[i] = arg;
    }
    return perm;
}

namespace {

long t_key(cx t) { return std::lround(std::arg(t) * 1e6); }

// multiset signature of a row of |S|, rounded
std::vector<long> row_signature(const Eigen::MatrixXcd& S, long i) {
    std::vector<long> sig(S.cols());
    for (long j = 0; j < S.cols(); ++j) sig[j] = std::lround(std::abs(S(i, j)) * 1e6);
    std::sort(sig.begin(), sig.end());
    return sig;
}

} // namespace

std::optional<std::vector<long>> match_md(const ModularData& md1, const ModularData& md2,
                                          double tol) {
    const long L = md1.size();
    if (md2.size() != L) return std::nullopt;

    // candidates per label: equal T (rounded) and equal |S|-row multiset
    std::vector<std::vector<long>> cand(L);
    std::vector<std::vector<long>> sig2(L);
    for (long j = 0; j < L; ++j) sig2[j] = row_signature(md2.S, j);
    for (long i = 0; i < L; ++i) {
        auto sig1 = row_signature(md1.S, i);
        for (long j = 0; j < L; ++j) {
            if (std::abs(md1.T[i] - md2.T[j]) > tol) continue;
            if (sig1 != sig2[j]) continue;
            cand[i].push_back(j);
        }
        if (cand[i].empty()) return std::nullopt;
    }
    if (std::find(cand[md1.id_index].begin(), cand[md1.id_index].end(), md2.id_index) ==
        cand[md1.id_index].end())
        return std::nullopt;

    std::vector<long> order(L);
    for (long i = 0; i < L; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](long a, long b) { return cand[a].size() < cand[b].size(); });
    // identity first
    std::stable_partition(order.begin(), order.end(),
                          [&](long i) { return i == md1.id_index; });

    std::vector<long> perm(L, -1);
    std::vector<char> used(L, 0);
    auto bt = [&](auto&& self, long k) -> bool {
        if (k == L) return true;
        long i = order[k];
        for (long j : cand[i]) {
            if (used[j]) continue;
            if (i == md1.id_index && j != md2.id_index) continue;
            bool ok = std::abs(md1.S(i, i) - md2.S(j, j)) <= tol;
            for (long k2 = 0; ok && k2 < k; ++k2) {
                long i2 = order[k2];
                if (std::abs(md1.S(i, i2) - md2.S(j, perm[i2])) > tol) ok = false;
            }
            if (!ok) continue;
            perm[i] = j;
            used[j] = 1;
            if (self(self, k + 1)) return true;
            perm[i] = -1;
            used[j] = 0;
        }
        return false;
    };
    if (!bt(bt, 0)) return std::nullopt;
    return perm;
}

SimpleCurrentReport simple_currents(const ModularData& md) {
    SimpleCurrentReport rep;
    const long L = md.size();
    for (long a = 0; a < L; ++a)
        if (std::abs(md.S(a, md.id_index) - md.S(md.id_index, md.id_index)) < 1e-6)
            rep.currents.push_back(a);
    auto fus = verlinde(md);
    auto C = charge_conjugation(md);
    // each current must act as a permutation (fusion matrix with one 1 per row)
    for (long a : rep.currents) {
        std::vector<long> image(L, -1);
        for (long b = 0; b < L; ++b) {
            long hits = 0, img = -1;
            for (long c = 0; c < L; ++c) {
                long v = fus.at(a, b, C[c]); // N_{a,b}^c = N_{a,b,Cc}
                if (v < 0 || v > 1) {
                    rep.ok = false;
                    rep.failures.push_back("current fusion multiplicity not 0/1");
                }
                if (v == 1) { ++hits; img = c; }
            }
            if (hits != 1) {
                rep.ok = false;
                rep.failures.push_back("current does not permute primaries");
            }
            image[b] = img;
        }
        // fixed-point free unless a is the identity
        if (a != md.id_index) {
            for (long b = 0; b < L; ++b)
                if (image[b] == b) {
                    rep.group_matches_expected = false;
                    rep.failures.push_back("simple current has a fixed point");
                    rep.ok = false;
                    break;
                }
        }
    }
    return rep;
}

} // namespace ng
