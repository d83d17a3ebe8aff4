#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eua/config_io.hpp"
#include "eua/oracle.hpp"
#include "eua/solver.hpp"

namespace eua {

// Batch evaluation over a case set: exact reference per case, repeated
// solver runs, performance-gap statistics and score correlation.

struct RunReport {
    std::uint64_t seed;
    double score;
    int allocated_users;
    int servers_used;
    std::optional<double> pg;
    std::int64_t timesteps;
};

struct CaseReport {
    std::string case_id;
    CaseKind kind;
    int n_users;
    int n_servers;
    ResourceVector dc;
    std::vector<RunReport> runs;
    double score_mean;
    double score_stddev;
    double reference_score;
    std::optional<double> pg_mean;  // nullopt when the reference score is ~0
    double pg_stddev;
    double mean_timesteps;
    bool skipped = false;  // oracle budget exhausted
    std::string skip_reason;
};

struct SuiteReport {
    std::vector<CaseReport> cases;
    int repeats;
    double pg_threshold;
    std::uint64_t suite_seed;
    nlohmann::json config_echo;

    double mean_pg_overall;
    double mean_pg_distributed;
    double mean_pg_centralized;
    double pearson_r;  // mean model score vs reference score, across cases
    bool pass;
    bool partial = false;  // some cases skipped
    std::vector<std::string> undefined_pg_cases;
};

// Deterministic per seed: the cases a suite config describes.
std::vector<Instance> build_suite_cases(const SuiteGenConfig& config);

// Generate the case files and manifest for a suite; deterministic per
// seed, byte-identical on repeat runs.
std::vector<std::string> generate_suite(const SuiteGenConfig& config,
                                        const std::filesystem::path& out_dir);

// Evaluate every case in the manifest: one exact solve plus `repeats`
// solver runs per case. Run seeds derive from (suite seed, case index,
// repeat index); jobs bounds the worker pool (0 = hardware default).
SuiteReport run_suite(const std::vector<Instance>& cases, const SolverConfig& config,
                      int repeats, double pg_threshold, int jobs = 0);

SuiteReport run_suite_from_manifest(const std::filesystem::path& manifest,
                                    const SolverConfig& config, int repeats,
                                    double pg_threshold, int jobs = 0);

struct SensitivityRow {
    std::string parameter;
    double value;
    std::optional<double> pg_distributed;
    std::optional<double> pg_centralized;
    std::optional<double> pg_overall;
};

// Re-evaluate the suite with one of {k1, k2, k3} swept over the given
// values, everything else fixed (same seeds across values).
std::vector<SensitivityRow> sensitivity_sweep(const std::vector<Instance>& cases,
                                              const SolverConfig& config, int repeats,
                                              const std::string& parameter,
                                              const std::vector<double>& values,
                                              int jobs = 0);

// Document rendering.
nlohmann::json result_to_json(const Instance& inst, const SolverConfig& config,
                              const SolveResult& result);
std::string trace_to_csv(const SolveTrace& trace);
nlohmann::json suite_report_to_json(const SuiteReport& report);
std::string suite_report_to_csv(const SuiteReport& report);
std::string sensitivity_to_csv(const std::vector<SensitivityRow>& rows);

std::string termination_to_string(Termination t);

}  // namespace eua
