#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "eua/generator.hpp"
#include "eua/solver.hpp"

namespace eua {

// Parameter documents carry every network and heuristic knob plus the b0
// schedule; every result file echoes them back for provenance.
nlohmann::json config_to_json(const SolverConfig& config);
SolverConfig config_from_json(const nlohmann::json& doc);

SolverConfig load_config(const std::filesystem::path& path);
void save_config(const SolverConfig& config, const std::filesystem::path& path);

// Case-set generator configuration (counts, sizes, DC-ratio targets).
struct SuiteGenConfig {
    int n_distributed = 15;
    int n_centralized = 15;
    std::uint64_t seed = 0;
    GeneratorParams distributed_params;
    GeneratorParams centralized_params;

    // per-case size ranges, sampled per case
    int nu_min_distributed = 8, nu_max_distributed = 12;
    int ns_min_distributed = 3, ns_max_distributed = 4;
    int nu_min_centralized = 10, nu_max_centralized = 15;
    int ns_min_centralized = 3, ns_max_centralized = 5;
    double r_min_distributed = 0.5, r_max_distributed = 1.0;
    double r_min_centralized = 0.8, r_max_centralized = 1.4;
};

nlohmann::json suite_gen_config_to_json(const SuiteGenConfig& config);
SuiteGenConfig suite_gen_config_from_json(const nlohmann::json& doc);
SuiteGenConfig load_suite_gen_config(const std::filesystem::path& path);

}  // namespace eua
