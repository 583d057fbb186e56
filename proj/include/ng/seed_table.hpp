#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ng {

// One catalogued type G+n system: c as a 24th-root exponent, diagonal pairing
// parameters, a-branch signs, the double's quadratic-form parameters on the
// order-(n+4) group (odd n: single m'; even n: the (m',m'') pair; empty when
// the source table leaves the column blank), and the angle vector j.
struct SeedRow {
    std::vector<long> group_factors;
    long c_exp24 = 0;
    std::vector<long> pairing_ms;   // one per factor (first factor fixed to 1 in the source)
    std::vector<int> a_signs;       // s1 or (s1,s2); empty for odd |G|
    std::vector<long> qprime;       // m' / (m',m''); {3,3} group flagged by qprime_group
    std::vector<long> qprime_group; // factors of G' when not Z_{n+4}
    std::vector<double> j;
};

// All rows for groups of order <= 13, in source order.
const std::vector<SeedRow>& seed_table();

// Rows for a specific group.
std::vector<SeedRow> seed_rows_for(const std::vector<long>& factors);

// Optional override: load a replacement table from a JSON file (the format
// written by `ng seedtable --dump`).  Path resolution: explicit argument,
// else $NEARGROUP_DATA, else the embedded table.
std::vector<SeedRow> load_seed_table(const std::string& path);

// Element order for the j-vector: representatives of {+-g} orbits, g != 0;
// cyclic: 1..floor(n/2); two factors: (g',0) then for g''=1..floor(n''/2)
// all (g', g'') with one representative per orbit.
std::vector<long> j_index_order(const std::vector<long>& factors);

} // namespace ng
