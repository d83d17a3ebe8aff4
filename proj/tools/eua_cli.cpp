// Command-line front end: generate case sets, run the network solver, the
// exact and greedy references, batch evaluation and parameter sweeps.

#include <cstdio>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "eua/config_io.hpp"
#include "eua/harness.hpp"
#include "eua/instance_io.hpp"

namespace fs = std::filesystem;
using namespace eua;

namespace {

SolverConfig make_config(const std::string& params_file, std::uint64_t seed) {
    SolverConfig config;
    if (!params_file.empty()) config = load_config(params_file);
    config.seed = seed;
    return config;
}

std::string run_name(int repeat) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "run_%02d", repeat);
    return buf;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"BCPNN attractor-network solver suite for edge user allocation"};
    app.require_subcommand(1);

    std::string params_file, out_dir = ".";
    std::uint64_t seed = 0;
    int repeats = 1;
    int jobs = 0;
    bool trace = false;
    double pg_threshold = 20.0;

    app.add_option("--params", params_file, "parameter file (JSON)")->capture_default_str();
    app.add_option("--seed", seed, "base seed")->capture_default_str();
    app.add_option("--repeats", repeats, "independent runs per case")->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_flag("--trace", trace, "emit per-step score traces");
    app.add_option("--pg-threshold", pg_threshold, "acceptable mean performance gap, percent")
        ->capture_default_str();
    app.add_option("--jobs", jobs, "worker pool size (0 = hardware)")->capture_default_str();

    // generate
    auto* gen = app.add_subcommand("generate", "generate a case set and manifest");
    std::string gen_config_file;
    gen->add_option("config", gen_config_file, "suite generator config (JSON)");

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run the network solver on one instance");
    std::string solve_instance_file;
    solve_cmd->add_option("instance", solve_instance_file, "instance file")->required();

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "exact branch-and-bound reference");
    std::string oracle_instance_file;
    std::int64_t node_budget = 10'000'000;
    oracle_cmd->add_option("instance", oracle_instance_file, "instance file")->required();
    oracle_cmd->add_option("--node-budget", node_budget, "search node budget")
        ->capture_default_str();

    // greedy
    auto* greedy_cmd = app.add_subcommand("greedy", "greedy baseline");
    std::string greedy_instance_file;
    greedy_cmd->add_option("instance", greedy_instance_file, "instance file")->required();

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a case set against the oracle");
    std::string eval_manifest;
    eval_cmd->add_option("manifest", eval_manifest, "case-set manifest")->required();

    // sensitivity
    auto* sens_cmd = app.add_subcommand("sensitivity", "sweep one heuristic weight");
    std::string sens_manifest, sens_param;
    std::vector<double> sens_values;
    sens_cmd->add_option("manifest", sens_manifest, "case-set manifest")->required();
    sens_cmd->add_option("--parameter", sens_param, "one of k1, k2, k3")->required();
    sens_cmd->add_option("--values", sens_values, "values to sweep")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        fs::create_directories(out_dir);

        if (*gen) {
            SuiteGenConfig config;
            if (!gen_config_file.empty()) config = load_suite_gen_config(gen_config_file);
            if (seed != 0) config.seed = seed;
            const auto files = generate_suite(config, out_dir);
            std::cout << "wrote " << files.size() << " cases + manifest to " << out_dir << "\n";
        } else if (*solve_cmd) {
            const Instance inst = load_instance(solve_instance_file);
            const SolverConfig base = make_config(params_file, seed);
            for (int r = 0; r < repeats; ++r) {
                SolverConfig config = base;
                config.seed = mix_seed(seed, r);
                const SolveResult result = solve(inst, config);
                const fs::path out = fs::path(out_dir) / (inst.id + "_" + run_name(r) + ".json");
                write_file(out, result_to_json(inst, config, result).dump(2) + "\n");
                if (trace) {
                    write_file(fs::path(out_dir) / (inst.id + "_" + run_name(r) + "_trace.csv"),
                               trace_to_csv(result.trace));
                }
                std::cout << inst.id << " " << run_name(r) << ": score " << result.eval.score
                          << " (A_u " << result.eval.allocated_users << ", U_s "
                          << result.eval.servers_used << ", b0 " << result.chosen_b0 << ")\n";
            }
        } else if (*oracle_cmd) {
            const Instance inst = load_instance(oracle_instance_file);
            const OracleResult result = exact_solve(inst, node_budget);
            const EvalResult eval = evaluate_allocation(inst, result.allocation);
            nlohmann::json doc{{"instance", inst.id},
                               {"assignment", result.allocation.assignment},
                               {"a_u", eval.allocated_users},
                               {"u_s", eval.servers_used},
                               {"score", result.score},
                               {"optimal", result.optimal},
                               {"nodes_explored", result.nodes_explored}};
            write_file(fs::path(out_dir) / (inst.id + "_oracle.json"), doc.dump(2) + "\n");
            std::cout << inst.id << ": optimal score " << result.score << " ("
                      << result.nodes_explored << " nodes)\n";
        } else if (*greedy_cmd) {
            const Instance inst = load_instance(greedy_instance_file);
            const OracleResult result = greedy_solve(inst);
            const EvalResult eval = evaluate_allocation(inst, result.allocation);
            nlohmann::json doc{{"instance", inst.id},
                               {"assignment", result.allocation.assignment},
                               {"a_u", eval.allocated_users},
                               {"u_s", eval.servers_used},
                               {"score", result.score},
                               {"optimal", result.optimal}};
            write_file(fs::path(out_dir) / (inst.id + "_greedy.json"), doc.dump(2) + "\n");
            std::cout << inst.id << ": greedy score " << result.score << "\n";
        } else if (*eval_cmd) {
            SolverConfig config = make_config(params_file, seed);
            const SuiteReport report =
                run_suite_from_manifest(eval_manifest, config, repeats, pg_threshold, jobs);
            write_file(fs::path(out_dir) / "suite_report.json",
                       suite_report_to_json(report).dump(2) + "\n");
            write_file(fs::path(out_dir) / "suite_summary.csv", suite_report_to_csv(report));
            std::cout << "mean PG " << report.mean_pg_overall << "% (distributed "
                      << report.mean_pg_distributed << "%, centralized "
                      << report.mean_pg_centralized << "%), pearson r " << report.pearson_r
                      << "\n"
                      << (report.pass ? "PASS" : "FAIL") << " against threshold "
                      << pg_threshold << "%\n";
            if (!report.undefined_pg_cases.empty()) {
                std::cout << "undefined PG (reference score ~0):";
                for (const auto& c : report.undefined_pg_cases) std::cout << ' ' << c;
                std::cout << "\n";
            }
            if (report.partial) {
                std::cout << "suite PARTIAL: some cases skipped (oracle budget)\n";
                return 2;
            }
        } else if (*sens_cmd) {
            SolverConfig config = make_config(params_file, seed);
            const fs::path dir = fs::path(sens_manifest).parent_path();
            std::vector<Instance> cases;
            for (const std::string& f : load_manifest(sens_manifest)) {
                cases.push_back(load_instance(dir / f));
            }
            const auto rows =
                sensitivity_sweep(cases, config, repeats, sens_param, sens_values, jobs);
            const std::string csv = sensitivity_to_csv(rows);
            write_file(fs::path(out_dir) / ("sensitivity_" + sens_param + ".csv"), csv);
            std::cout << csv;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
