#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "ng/pairing.hpp"

namespace ng {

// One branch of the type G+n equations: group, pairing, the a-map solving
// the first three identities of (5.1), and a cube root c of sqrt(n)/sum a.
struct SecondClassInstance {
    AbelianGroup G;
    SymmetricPairing pairing;
    std::vector<cx> a;
    cx c;
    long psi_index = 0; // two-torsion character picked on top of the base a0
    int c_branch = 0;

    double delta() const {
        double n = double(G.order);
        return (n + std::sqrt(n * n + 4 * n)) / 2.0;
    }
};

struct SecondClassSolution {
    SecondClassInstance inst;
    std::vector<cx> b;
    double residual = 0.0;
};

// Affine solution space of the linear equations (5.2): b = origin + basis*t.
struct LinearStage {
    bool consistent = false;
    Eigen::VectorXd origin;          // 2n reals (Re b | Im b)
    Eigen::MatrixXd basis;           // 2n x d, orthonormal columns
    long dim() const { return consistent ? basis.cols() : -1; }
    std::vector<cx> b_of(const Eigen::VectorXd& t) const;
};

struct SolveOptions {
    long starts = 2000;
    std::uint64_t seed = 42;
    double tol = 1e-9;          // acceptance threshold on the full residual
    double refine_target = 1e-12;
    int threads = 1;
    bool high_precision = false; // double-double polish in refine()
};

// All solutions a of a(0)=1, a(-x)=a(x), a(x+y)<x,y> = a(x)a(y):
// the canonical refinement times each order-<=2 character.
std::vector<std::vector<cx>> a_candidates(const AbelianGroup& G, const SymmetricPairing& p);

// The 3 cube roots of sqrt(n)/sum a; empty when |sum a| != sqrt(n).
std::vector<cx> c_candidates(const AbelianGroup& G, const std::vector<cx>& a);

LinearStage linear_stage(const SecondClassInstance& inst);

// Max |LHS-RHS| over every instantiated identity of (5.1)-(5.4).
double full_residual(const SecondClassInstance& inst, const std::vector<cx>& b);

// Newton multi-start on the square norm subsystem; returns solutions passing
// the full residual filter, refined and deduplicated.  `seeds` are optional
// starting b-vectors (e.g. from the Table-2 seed file).  Emits a warning flag
// when the square-subsystem root count is odd (Bezout parity heuristic).
struct NormStageResult {
    std::vector<SecondClassSolution> solutions;
    long square_roots = 0;
    bool parity_warning = false;
};
NormStageResult norm_stage(const LinearStage& space, const SecondClassInstance& inst,
                           const SolveOptions& opts,
                           const std::vector<std::vector<cx>>& seeds = {});

// Newton polish on the square subsystem until the full residual is below
// `target`; throws on divergence.
SecondClassSolution refine(const SecondClassSolution& sol, double target = 1e-12,
                           int max_iter = 50, bool high_precision = false);

struct ClassRecord {
    SecondClassSolution rep;
    int class_id = 0;
    int conjugate_of = -1;        // class id of the conjugate class (may be self)
    std::vector<long> pairing_ms; // diagonal pairing parameters of the orbit rep
    std::vector<int> psi_signs;   // two-torsion character as +-1 per factor generator
    std::string provenance;       // "discovered" or "seed-table"
};

// Classify type G+n C*-categories over diagonal pairing orbits; reproduces
// Proposition 6 / Table 2.  |G| <= max_order guard.
std::vector<ClassRecord> classify(const AbelianGroup& G, const SolveOptions& opts,
                                  long max_order = 16);

// Automorphisms used to merge solutions for a fixed pairing orbit: pairing
// stabilizers, restricted per the conventions the paper's counting follows
// (see the design notes in izumi.cpp).
std::vector<std::vector<long>> merge_automorphisms(const AbelianGroup& G,
                                                   const SymmetricPairing& pairing);

} // namespace ng
