#include "ng/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ng {

namespace {

double commute_residual(const ModularData& md, const Eigen::MatrixXd& X) {
    Eigen::MatrixXcd Xc = X.cast<cx>();
    double r1 = (Xc * md.S - md.S * Xc).cwiseAbs().maxCoeff();
    Eigen::MatrixXcd Td = md.T.asDiagonal();
    double r2 = (Xc * Td - Td * Xc).cwiseAbs().maxCoeff();
    return std::max(r1, r2);
}

std::vector<double> quantum_dims(const ModularData& md) {
    std::vector<double> d(md.size());
    for (long a = 0; a < md.size(); ++a)
        d[a] = md.S(a, md.id_index).real() / md.S(md.id_index, md.id_index).real();
    return d;
}

} // namespace

std::vector<Eigen::MatrixXd> commutant_basis(const ModularData& md, double tol) {
    const long L = md.size();
    // support: pairs (i,j) with T_i == T_j
    std::vector<std::pair<long, long>> sup;
    for (long i = 0; i < L; ++i)
        for (long j = 0; j < L; ++j)
            if (std::abs(md.T[i] - md.T[j]) < tol) sup.emplace_back(i, j);
    const long m = long(sup.size());

    // constraints: (X S - S X)_{ij} = 0 for all i,j (real+imag rows)
    Eigen::MatrixXd A(2 * L * L, m);
    A.setZero();
    for (long k = 0; k < m; ++k) {
        auto [p, q] = sup[k];
        // X_{pq} contributes +X_{pq} S_{q,j} to row (p,j) and -S_{i,p} X_{pq} to (i,q)
        for (long j = 0; j < L; ++j) {
            long row = p * L + j;
            A(2 * row, k) += md.S(q, j).real();
            A(2 * row + 1, k) += md.S(q, j).imag();
        }
        for (long i = 0; i < L; ++i) {
            long row = i * L + q;
            A(2 * row, k) -= md.S(i, p).real();
            A(2 * row + 1, k) -= md.S(i, p).imag();
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeFullV);
    long rank = 0;
    double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0;
    for (long i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > std::max(tol * 1e-2, 1e-12 * smax)) ++rank;
    long d = m - rank;
    std::vector<Eigen::MatrixXd> basis;
    for (long k = 0; k < d; ++k) {
        Eigen::VectorXd v = svd.matrixV().col(m - 1 - k);
        Eigen::MatrixXd X = Eigen::MatrixXd::Zero(L, L);
        for (long t = 0; t < m; ++t) X(sup[t].first, sup[t].second) = v[t];
        basis.push_back(std::move(X));
    }
    return basis;
}

std::vector<ModularInvariant> enumerate_invariants(const ModularData& md,
                                                   const InvariantOptions& opts) {
    const long L = md.size();
    auto basis = commutant_basis(md);
    const long d = long(basis.size());
    if (d > opts.dim_cap) throw std::runtime_error("enumerate_invariants: commutant dim cap");
    auto qd = quantum_dims(md);

    // entry list with bounds; pivots picked by QR on the basis matrix rows
    std::vector<std::pair<long, long>> entries;
    for (long i = 0; i < L; ++i)
        for (long j = 0; j < L; ++j) entries.emplace_back(i, j);
    Eigen::MatrixXd M(L * L, d);
    for (long k = 0; k < d; ++k)
        for (long t = 0; t < L * L; ++t) M(t, k) = basis[k](entries[t].first, entries[t].second);

    // order candidate pivot entries by bound, then pick d independent ones
    std::vector<long> order(L * L);
    for (long t = 0; t < L * L; ++t) order[t] = t;
    auto bound_of = [&](long t) {
        return long(std::ceil(qd[entries[t].first] * qd[entries[t].second])) + opts.bound_slack;
    };
    std::sort(order.begin(), order.end(), [&](long a, long b) {
        long ba = bound_of(a), bb = bound_of(b);
        if (ba != bb) return ba < bb;
        return a < b;
    });
    std::vector<long> piv;
    Eigen::MatrixXd P(d, d);
    long have = 0;
    for (long t : order) {
        if (have == d) break;
        Eigen::MatrixXd trial(have + 1, d);
        for (long r = 0; r < have; ++r) trial.row(r) = M.row(piv[r]);
        trial.row(have) = M.row(t);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(trial);
        if (svd.rank() == have + 1) { piv.push_back(t); ++have; }
    }
    if (have < d) throw std::runtime_error("enumerate_invariants: pivot selection failed");
    for (long r = 0; r < d; ++r) P.row(r) = M.row(piv[r]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(P);

    std::vector<ModularInvariant> out;
    std::vector<long> vals(d, 0);
    long nodes = 0;
    auto rec = [&](auto&& self, long k) -> void {
        if (++nodes > opts.node_cap) throw std::runtime_error("enumerate_invariants: node cap");
        if (k == d) {
            Eigen::VectorXd rhs(d);
            for (long r = 0; r < d; ++r) rhs[r] = double(vals[r]);
            Eigen::VectorXd coef = lu.solve(rhs);
            Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(L, L);
            for (long t = 0; t < d; ++t) Z += coef[t] * basis[t];
            // integrality, positivity, normalization, bounds
            if (std::abs(Z(md.id_index, md.id_index) - 1.0) > 1e-6) return;
            Eigen::MatrixXi Zi(L, L);
            for (long i = 0; i < L; ++i)
                for (long j = 0; j < L; ++j) {
                    double v = Z(i, j);
                    double r = std::round(v);
                    if (std::abs(v - r) > 1e-6 || r < -1e-9) return;
                    if (r > std::ceil(qd[i] * qd[j]) + opts.bound_slack + 1e-9) return;
                    Zi(i, j) = int(r);
                }
            ModularInvariant inv;
            inv.Z = Zi;
            inv.commute_residual = commute_residual(md, Zi.cast<double>());
            if (inv.commute_residual > 1e-8) return;
            for (const auto& e : out)
                if (e.Z == inv.Z) return;
            out.push_back(std::move(inv));
            return;
        }
        long bnd = bound_of(piv[k]);
        for (long v = 0; v <= bnd; ++v) {
            vals[k] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);

    // tag monomials among the found invariants: Z = vv^T with v = Z e_0
    for (auto& inv : out) {
        Eigen::VectorXi v = inv.Z.col(md.id_index);
        inv.monomial = (inv.Z == v * v.transpose());
        if (inv.monomial) {
            inv.type1_shown = true;
            inv.pretty = "|" + pretty_vector(md, v) + "|^2";
        }
    }
    std::sort(out.begin(), out.end(), [](const ModularInvariant& a, const ModularInvariant& b) {
        long sa = a.Z.sum(), sb = b.Z.sum();
        if (sa != sb) return sa < sb;
        for (long i = 0; i < a.Z.rows(); ++i)
            for (long j = 0; j < a.Z.cols(); ++j)
                if (a.Z(i, j) != b.Z(i, j)) return a.Z(i, j) < b.Z(i, j);
        return false;
    });
    return out;
}

std::vector<ModularInvariant> monomial_invariants(const ModularData& md,
                                                  const InvariantOptions& opts) {
    const long L = md.size();
    auto qd = quantum_dims(md);
    // sector: labels with T = T_0
    std::vector<long> sector;
    for (long a = 0; a < L; ++a)
        if (std::abs(md.T[a] - md.T[md.id_index]) < 1e-8) sector.push_back(a);
    const long s = long(sector.size());

    // linear constraints: (S v)_b = 0 for b outside the sector
    std::vector<long> outside;
    for (long b = 0; b < L; ++b)
        if (std::abs(md.T[b] - md.T[md.id_index]) >= 1e-8) outside.push_back(b);

    std::vector<ModularInvariant> found;
    std::vector<long> v(s, 0);
    // order sector entries: identity first (forced 1), then by bound
    std::vector<long> ord(s);
    for (long i = 0; i < s; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](long a, long b) {
        if (sector[a] == md.id_index) return true;
        if (sector[b] == md.id_index) return false;
        return std::ceil(qd[sector[a]]) < std::ceil(qd[sector[b]]);
    });

    // interval pruning on sum_i S_{b, sector_i} v_i = 0 for outside b
    long nodes = 0;
    auto rec = [&](auto&& self, long k) -> void {
        if (++nodes > opts.node_cap) throw std::runtime_error("monomial_invariants: node cap");
        if (k == s) {
            Eigen::VectorXcd Sv = Eigen::VectorXcd::Zero(L);
            for (long i = 0; i < s; ++i)
                if (v[i]) Sv += double(v[i]) * md.S.col(sector[i]);
            // S v = kappa v on the full space
            cx kappa = Sv[md.id_index]; // v_0 = 1
            double err = 0;
            Eigen::VectorXd vf = Eigen::VectorXd::Zero(L);
            for (long i = 0; i < s; ++i) vf[sector[i]] = double(v[i]);
            for (long b = 0; b < L; ++b) err = std::max(err, std::abs(Sv[b] - kappa * vf[b]));
            if (err > 1e-8) return;
            Eigen::VectorXi vi = vf.cast<int>();
            Eigen::MatrixXi Z = vi * vi.transpose();
            ModularInvariant inv;
            inv.Z = Z;
            inv.monomial = true;
            inv.type1_shown = true;
            inv.commute_residual = commute_residual(md, Z.cast<double>());
            if (inv.commute_residual > 1e-8) return;
            inv.pretty = "|" + pretty_vector(md, vi) + "|^2";
            for (const auto& e : found)
                if (e.Z == inv.Z) return;
            found.push_back(std::move(inv));
            return;
        }
        long idx = ord[k];
        long lab = sector[idx];
        long lo = (lab == md.id_index) ? 1 : 0;
        long hi = (lab == md.id_index) ? 1 : long(std::ceil(qd[lab])) + opts.bound_slack;
        for (long t = lo; t <= hi; ++t) {
            v[idx] = t;
            // prune: partial |sum over assigned| vs max attainable from the rest
            bool feasible = true;
            for (long b : outside) {
                cx acc = 0;
                double slack = 0;
                for (long i = 0; i <= k; ++i) acc += double(v[ord[i]]) * md.S(b, sector[ord[i]]);
                for (long i = k + 1; i < s; ++i) {
                    long lb = sector[ord[i]];
                    double bound = (lb == md.id_index)
                                       ? 1.0
                                       : double(long(std::ceil(qd[lb])) + opts.bound_slack);
                    slack += bound * std::abs(md.S(b, lb));
                }
                if (std::abs(acc) > slack + 1e-8) { feasible = false; break; }
            }
            if (feasible) self(self, k + 1);
        }
        v[idx] = 0;
    };
    rec(rec, 0);
    return found;
}

std::string pretty_vector(const ModularData& md, const Eigen::VectorXi& v) {
    std::string s;
    for (long i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (v[i] != 1) s += std::to_string(v[i]) + "*";
        s += md.labels[i].str();
    }
    return s;
}

} // namespace ng
