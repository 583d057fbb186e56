#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>

#include "ng/izumi.hpp"
#include "ng/modular_data.hpp"
#include "ng/seed_table.hpp"

namespace ng {

struct Catalog {
    std::string group;
    std::uint64_t seed = 0;
    long starts = 0;
    std::string tool_version;
    std::vector<ClassRecord> classes;
};

nlohmann::json catalog_to_json(const Catalog& cat);
Catalog catalog_from_json(const nlohmann::json& j);
void save_catalog(const Catalog& cat, const std::string& path);
// Reloads and re-verifies every record (residual recheck within 10x stored).
Catalog load_catalog(const std::string& path);

nlohmann::json md_to_json(const ModularData& md);
ModularData md_from_json(const nlohmann::json& j);
void save_md(const ModularData& md, const std::string& path);
ModularData load_md(const std::string& path);

// Builds the solution a SeedRow describes in our normalization.  Tries the
// direct reading of the (m, signs) columns first and the conjugate reading
// second (see decisions notes); returns the refined solution or nullopt.
struct SeedInterpretation {
    SecondClassSolution sol;
    bool conjugate_reading = false;
};
std::optional<SeedInterpretation> interpret_seed_row(const SeedRow& row, double tol = 1e-4);

// Criterion-2 style match: does some Aut(G)-transport of `rec` agree with the
// row's refined solution within tol?
bool class_matches_row(const ClassRecord& rec, const SeedRow& row, double tol = 1e-6);

// The double's comparison target from the row's Q' column (odd n only).
std::optional<ModularData> qq_target_for_row(const SeedRow& row);

std::string format_complex(const cx& z);

} // namespace ng
