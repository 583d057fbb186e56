#pragma once

#include "ng/izumi.hpp"
#include "ng/modular_data.hpp"

namespace ng {

// Half-braiding triple for sigma = rho in the second class.
struct Triple {
    long tau = 0; // element index in G
    cx omega;
    std::vector<cx> xi; // G -> T
};

// Max residual over the four triple-equation families plus |omega|=|xi|=1.
double triple_residual(const SecondClassSolution& sol, const Triple& t);

struct TripleSolveResult {
    std::vector<Triple> triples;
    bool complete = false; // count == n(n+3)/2
    long expected = 0;
};

// Gauss-Newton multi-start per tau; deduplicated (1e-6), refined to 1e-12,
// deterministically ordered.
TripleSolveResult solve_triples(const SecondClassSolution& sol, long starts = 200,
                                std::uint64_t seed = 42, int threads = 1);

// Section 4.3 block modular data on n(n+3) primaries.
ModularData md_second_class(const SecondClassSolution& sol, const std::vector<Triple>& triples);

} // namespace ng
