#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "ng/rational.hpp"

namespace ng {

// Primary label: a family tag plus integer parameters, e.g. {"a",{g}},
// {"c",{k,l}}, {"d",{m,gamma}}, {"g",{g}}, {"wh",{w,h}}, {"rho",{t}}.
struct Label {
    std::string family;
    std::vector<long> params;
    bool operator==(const Label& o) const { return family == o.family && params == o.params; }
    std::string str() const;
};

struct ModularData {
    std::vector<Label> labels;
    Eigen::MatrixXcd S;
    Eigen::VectorXcd T;
    long id_index = 0;
    double lambda = 0; // global dimension; 1/S_{0,0}^2 up to numerics

    long size() const { return long(labels.size()); }
    long find_label(const Label& l) const;
};

struct AxiomReport {
    bool ok = true;
    double s_unitary = 0;     // ||S S^H - I||_inf
    double s_symmetric = 0;   // ||S - S^T||_inf
    double c_permutation = 0; // distance of S^2 from a permutation matrix
    double c_involution = 0;  // ||C^2 - I||_inf
    double st_cubed = 0;      // ||(ST)^3 - S^2||_inf
    long t_order = 0;         // smallest k <= cap with T^k = 1 (0 if none)
    double verlinde_error = 0;
    double verlinde_min = 0;  // most negative rounded entry
    bool s_row_positive = false;
    double lambda_error = 0;  // |1/S00^2 - lambda|
    std::vector<std::string> failures;
};

struct FusionTensor {
    long size = 0;
    std::vector<long> N; // N[a*size*size + b*size + c], totally symmetric
    double max_round_error = 0;
    long min_entry = 0;
    long at(long a, long b, long c) const { return N[(a * size + b) * size + c]; }
};

AxiomReport verify_axioms(const ModularData& md, double tol = 1e-8, long t_order_cap = 10000);

FusionTensor verlinde(const ModularData& md);

// Permutation C with S^2 = C (rounded); throws if S^2 is not a permutation.
std::vector<long> charge_conjugation(const ModularData& md);

// Backtracking label bijection pi with T1 = T2 o pi and S1 = pi^* S2 pi
// within tol; identity maps to identity.  Pruning groups labels by rounded T
// and sorted |S|-row multisets.
std::optional<std::vector<long>> match_md(const ModularData& md1, const ModularData& md2,
                                          double tol = 1e-6);

struct SimpleCurrentReport {
    bool ok = true;
    std::vector<long> currents;         // label indices with S_{a,0} = S_{0,0}
    bool group_matches_expected = true; // fusion action closes and is fixed-point free
    std::vector<std::string> failures;
};

// Finds all simple currents and verifies (via the Verlinde tensor) that they
// form a group acting without fixed points on the primaries.
SimpleCurrentReport simple_currents(const ModularData& md);

} // namespace ng
