#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ng/modular_data.hpp"

namespace ng {

struct ModularInvariant {
    Eigen::MatrixXi Z;
    bool monomial = false;
    bool type1_shown = false;
    double commute_residual = 0;
    std::string pretty; // generator-function form when monomial/type I
};

// Basis of { real X : XS = SX, XT = TX }, rank-revealing at `tol`.
// Exploits [X,T]=0: support restricted to pairs with equal T values.
std::vector<Eigen::MatrixXd> commutant_basis(const ModularData& md, double tol = 1e-8);

struct InvariantOptions {
    long dim_cap = 12;      // commutant dimension cap
    long bound_slack = 0;   // added to the entry bounds (exhaustiveness probe)
    long node_cap = 2000000;
};

// Integer points of the commutant with Z_{00}=1 and 0 <= Z_ab <= ceil(d_a d_b)
// (+slack), by DFS over pivot entries of the commutant basis.
std::vector<ModularInvariant> enumerate_invariants(const ModularData& md,
                                                   const InvariantOptions& opts = {});

// Monomial invariants vv^T: v >= 0 integer, v_0 = 1, entries <= ceil(d_a)
// (+slack), supported on labels with T_a = T_0, with S v parallel to v.
std::vector<ModularInvariant> monomial_invariants(const ModularData& md,
                                                  const InvariantOptions& opts = {});

std::string pretty_vector(const ModularData& md, const Eigen::VectorXi& v);

} // namespace ng
