#include "ng/dd.hpp"

#include "ng/izumi.hpp"

namespace ng {

void dd_polish_norms(SecondClassSolution& sol, const LinearStage& space) {
    const long n = sol.inst.G.order;
    const long d = space.basis.cols();
    if (d == 0) return;
    Eigen::VectorXd v(2 * n);
    for (long i = 0; i < n; ++i) { v[i] = sol.b[i].real(); v[n + i] = sol.b[i].imag(); }
    Eigen::VectorXd t = space.basis.transpose() * (v - space.origin);

    // the d norm equations with the largest gradient pivots
    std::vector<long> sel;
    {
        Eigen::MatrixXd Gm(n - 1, d);
        for (long g = 1; g < n; ++g)
            for (long k = 0; k < d; ++k)
                Gm(g - 1, k) = 2.0 * (sol.b[g].real() * space.basis(g, k) +
                                      sol.b[g].imag() * space.basis(n + g, k));
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Gm.transpose());
        auto perm = qr.colsPermutation().indices();
        for (long i = 0; i < d && i < perm.size(); ++i) sel.push_back(perm[i] + 1);
    }

    auto coord_dd = [&](const Eigen::VectorXd& tt, long row) {
        dd acc(space.origin[row]);
        for (long k = 0; k < d; ++k)
            acc = dd_add(acc, dd_mul(dd(space.basis(row, k)), dd(tt[k])));
        return acc;
    };

    for (int iter = 0; iter < 2; ++iter) {
        Eigen::VectorXd f(d);
        Eigen::MatrixXd J(d, d);
        for (long i = 0; i < d; ++i) {
            long g = sel[i];
            dd re = coord_dd(t, g), im = coord_dd(t, n + g);
            dd nrm = dd_add(dd_mul(re, re), dd_mul(im, im));
            double r0 = 1.0 / double(n);
            dd inv_n(r0, -std::fma(r0, double(n), -1.0) * r0);
            f[i] = dd_sub(nrm, inv_n).to_double();
            for (long k = 0; k < d; ++k)
                J(i, k) = 2.0 * (re.to_double() * space.basis(g, k) +
                                 im.to_double() * space.basis(n + g, k));
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(J);
        if (!lu.isInvertible()) break;
        t += lu.solve(-f);
    }
    auto b = space.b_of(t);
    sol.b = b;
}

} // namespace ng
