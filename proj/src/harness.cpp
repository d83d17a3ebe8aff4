#include "eua/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "eua/generator.hpp"
#include "eua/instance_io.hpp"

namespace eua {

using nlohmann::json;

std::string termination_to_string(Termination t) {
    return t == Termination::stable ? "stable" : "step-cap";
}

std::vector<Instance> build_suite_cases(const SuiteGenConfig& c) {
    std::vector<Instance> cases;
    const int total = c.n_distributed + c.n_centralized;
    for (int idx = 0; idx < total; ++idx) {
        const bool distributed = idx < c.n_distributed;
        Rng rng(mix_seed(c.seed, static_cast<std::uint64_t>(idx) + 1000));
        GeneratorParams p = distributed ? c.distributed_params : c.centralized_params;
        p.kind = distributed ? CaseKind::distributed : CaseKind::centralized;
        if (distributed) {
            p.n_users = static_cast<int>(rng.next_int(c.nu_min_distributed, c.nu_max_distributed));
            p.n_servers = static_cast<int>(rng.next_int(c.ns_min_distributed, c.ns_max_distributed));
            p.r_target = {rng.next_real(c.r_min_distributed, c.r_max_distributed),
                          rng.next_real(c.r_min_distributed, c.r_max_distributed)};
        } else {
            p.n_users = static_cast<int>(rng.next_int(c.nu_min_centralized, c.nu_max_centralized));
            p.n_servers = static_cast<int>(rng.next_int(c.ns_min_centralized, c.ns_max_centralized));
            p.r_target = {rng.next_real(c.r_min_centralized, c.r_max_centralized),
                          rng.next_real(c.r_min_centralized, c.r_max_centralized)};
        }
        Instance inst = generate_instance(p, mix_seed(c.seed, idx));

        char name[16];
        std::snprintf(name, sizeof(name), "case_%02d", idx);
        inst.id = name;
        cases.push_back(std::move(inst));
    }
    return cases;
}

std::vector<std::string> generate_suite(const SuiteGenConfig& c,
                                        const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> files;
    for (const Instance& inst : build_suite_cases(c)) {
        const std::string name = inst.id + ".json";
        save_instance(inst, out_dir / name);
        files.push_back(name);
    }
    write_file(out_dir / "manifest.json", render_manifest(files));
    return files;
}

namespace {

// Runs tasks [0, count) on a bounded pool; results land in caller-indexed
// slots so assembly order is independent of completion order.
template <typename Fn>
void parallel_for(int count, int jobs, Fn fn) {
    if (jobs <= 0) {
        jobs = static_cast<int>(std::thread::hardware_concurrency());
        if (jobs <= 0) jobs = 1;
    }
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    pool.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

double mean(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const double mx = mean(x), my = mean(y);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0 || syy == 0) return 0.0;
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace

SuiteReport run_suite(const std::vector<Instance>& cases, const SolverConfig& config,
                      int repeats, double pg_threshold, int jobs) {
    if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
    SuiteReport report;
    report.repeats = repeats;
    report.pg_threshold = pg_threshold;
    report.suite_seed = config.seed;
    report.config_echo = config_to_json(config);
    report.cases.resize(cases.size());

    struct Task {
        int case_index;
        int repeat;  // -1 = the exact reference solve
    };
    std::vector<Task> tasks;
    for (int ci = 0; ci < static_cast<int>(cases.size()); ++ci) {
        tasks.push_back({ci, -1});
        for (int r = 0; r < repeats; ++r) tasks.push_back({ci, r});
    }

    std::vector<OracleResult> refs(cases.size());
    std::vector<std::string> ref_errors(cases.size());
    std::vector<std::vector<SolveResult>> runs(cases.size());
    for (auto& r : runs) r.resize(repeats);
    std::vector<std::vector<std::uint64_t>> run_seeds(cases.size());

    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        run_seeds[ci].resize(repeats);
        for (int r = 0; r < repeats; ++r) {
            run_seeds[ci][r] = mix_seed(mix_seed(config.seed, ci), r);
        }
    }

    parallel_for(static_cast<int>(tasks.size()), jobs, [&](int ti) {
        const Task& task = tasks[ti];
        const Instance& inst = cases[task.case_index];
        if (task.repeat < 0) {
            try {
                refs[task.case_index] = exact_solve(inst);
            } catch (const OracleBudgetExhausted& e) {
                ref_errors[task.case_index] = e.what();
            }
        } else {
            SolverConfig run_config = config;
            run_config.seed = run_seeds[task.case_index][task.repeat];
            runs[task.case_index][task.repeat] = solve(inst, run_config);
        }
    });

    std::vector<double> all_pg, dist_pg, cent_pg;
    std::vector<double> model_means, ref_scores;
    for (std::size_t ci = 0; ci < cases.size(); ++ci) {
        const Instance& inst = cases[ci];
        CaseReport& cr = report.cases[ci];
        cr.case_id = inst.id.empty() ? ("case_" + std::to_string(ci)) : inst.id;
        cr.kind = inst.kind();
        cr.n_users = inst.n_users();
        cr.n_servers = inst.n_servers();
        cr.dc = dc_ratio(inst);

        if (!ref_errors[ci].empty()) {
            cr.skipped = true;
            cr.skip_reason = ref_errors[ci];
            report.partial = true;
            continue;
        }
        cr.reference_score = refs[ci].score;

        std::vector<double> scores, pgs, steps;
        for (int r = 0; r < repeats; ++r) {
            const SolveResult& res = runs[ci][r];
            RunReport rr;
            rr.seed = run_seeds[ci][r];
            rr.score = res.eval.score;
            rr.allocated_users = res.eval.allocated_users;
            rr.servers_used = res.eval.servers_used;
            rr.pg = performance_gap(res.eval.score, cr.reference_score);
            rr.timesteps = res.trace.total_timesteps();
            scores.push_back(rr.score);
            steps.push_back(static_cast<double>(rr.timesteps));
            if (rr.pg) pgs.push_back(*rr.pg);
            cr.runs.push_back(rr);
        }
        cr.score_mean = mean(scores);
        cr.score_stddev = stddev(scores);
        cr.mean_timesteps = mean(steps);
        if (pgs.empty()) {
            cr.pg_mean = std::nullopt;
            cr.pg_stddev = 0.0;
            report.undefined_pg_cases.push_back(cr.case_id);
        } else {
            cr.pg_mean = mean(pgs);
            cr.pg_stddev = stddev(pgs);
            for (double pg : pgs) {
                all_pg.push_back(pg);
                (cr.kind == CaseKind::distributed ? dist_pg : cent_pg).push_back(pg);
            }
        }
        model_means.push_back(cr.score_mean);
        ref_scores.push_back(cr.reference_score);
    }

    report.mean_pg_overall = mean(all_pg);
    report.mean_pg_distributed = mean(dist_pg);
    report.mean_pg_centralized = mean(cent_pg);
    report.pearson_r = model_means.size() >= 2 ? pearson(model_means, ref_scores) : 1.0;
    report.pass = !report.partial && report.mean_pg_overall <= pg_threshold;
    return report;
}

SuiteReport run_suite_from_manifest(const std::filesystem::path& manifest,
                                    const SolverConfig& config, int repeats,
                                    double pg_threshold, int jobs) {
    const std::filesystem::path dir = manifest.parent_path();
    std::vector<Instance> cases;
    for (const std::string& file : load_manifest(manifest)) {
        cases.push_back(load_instance(dir / file));
    }
    return run_suite(cases, config, repeats, pg_threshold, jobs);
}

std::vector<SensitivityRow> sensitivity_sweep(const std::vector<Instance>& cases,
                                              const SolverConfig& config, int repeats,
                                              const std::string& parameter,
                                              const std::vector<double>& values,
                                              int jobs) {
    if (parameter != "k1" && parameter != "k2" && parameter != "k3") {
        throw std::invalid_argument("sensitivity parameter must be one of k1, k2, k3");
    }
    std::vector<SensitivityRow> rows;
    for (double v : values) {
        SolverConfig swept = config;
        if (parameter == "k1") swept.heuristics.k1 = v;
        if (parameter == "k2") swept.heuristics.k2 = v;
        if (parameter == "k3") swept.heuristics.k3 = v;  // b3 tracks k3/2
        const SuiteReport rep = run_suite(cases, swept, repeats, 100.0, jobs);
        SensitivityRow row;
        row.parameter = parameter;
        row.value = v;
        row.pg_overall = rep.mean_pg_overall;
        row.pg_distributed = rep.mean_pg_distributed;
        row.pg_centralized = rep.mean_pg_centralized;
        rows.push_back(row);
    }
    return rows;
}

json result_to_json(const Instance& inst, const SolverConfig& config,
                    const SolveResult& result) {
    json per_b0 = json::array();
    for (const B0Trace& run : result.trace.runs) {
        per_b0.push_back({{"b0", run.b0},
                          {"termination", termination_to_string(run.termination)},
                          {"timesteps", run.steps.size()},
                          {"best_score", run.best_score}});
    }
    return json{
        {"instance", inst.id},
        {"config", config_to_json(config)},
        {"chosen_b0", result.chosen_b0},
        {"assignment", result.best.assignment},
        {"a_u", result.eval.allocated_users},
        {"u_s", result.eval.servers_used},
        {"score", result.eval.score},
        {"feasible", result.eval.feasible},
        {"per_b0", per_b0},
        {"total_timesteps", result.trace.total_timesteps()},
    };
}

std::string trace_to_csv(const SolveTrace& trace) {
    std::ostringstream out;
    out << "b0,timestep,raw_score,repaired_score\n";
    for (const B0Trace& run : trace.runs) {
        for (const StepRecord& s : run.steps) {
            out << run.b0 << ',' << s.timestep << ',' << s.raw_score << ','
                << s.repaired_score << '\n';
        }
    }
    return out.str();
}

json suite_report_to_json(const SuiteReport& report) {
    json cases = json::array();
    for (const CaseReport& cr : report.cases) {
        json jc{{"case", cr.case_id},
                {"kind", to_string(cr.kind)},
                {"n_users", cr.n_users},
                {"n_servers", cr.n_servers},
                {"dc_core", cr.dc.core},
                {"dc_ram", cr.dc.ram}};
        if (cr.skipped) {
            jc["skipped"] = true;
            jc["reason"] = cr.skip_reason;
            cases.push_back(std::move(jc));
            continue;
        }
        json runs = json::array();
        for (const RunReport& rr : cr.runs) {
            json jr{{"seed", rr.seed},
                    {"score", rr.score},
                    {"a_u", rr.allocated_users},
                    {"u_s", rr.servers_used},
                    {"timesteps", rr.timesteps}};
            if (rr.pg) jr["pg"] = *rr.pg;
            runs.push_back(std::move(jr));
        }
        jc["runs"] = std::move(runs);
        jc["score_mean"] = cr.score_mean;
        jc["score_stddev"] = cr.score_stddev;
        jc["reference_score"] = cr.reference_score;
        if (cr.pg_mean) {
            jc["pg_mean"] = *cr.pg_mean;
            jc["pg_stddev"] = cr.pg_stddev;
        }
        jc["mean_timesteps"] = cr.mean_timesteps;
        cases.push_back(std::move(jc));
    }
    return json{
        {"config", report.config_echo},
        {"repeats", report.repeats},
        {"suite_seed", report.suite_seed},
        {"pg_threshold", report.pg_threshold},
        {"cases", std::move(cases)},
        {"mean_pg_overall", report.mean_pg_overall},
        {"mean_pg_distributed", report.mean_pg_distributed},
        {"mean_pg_centralized", report.mean_pg_centralized},
        {"pearson_r", report.pearson_r},
        {"pass", report.pass},
        {"partial", report.partial},
        {"undefined_pg_cases", report.undefined_pg_cases},
    };
}

std::string suite_report_to_csv(const SuiteReport& report) {
    std::ostringstream out;
    out << "case,kind,n_users,n_servers,dc_core,dc_ram,score_mean,score_stddev,"
           "reference_score,pg_mean,pg_stddev,mean_timesteps\n";
    for (const CaseReport& cr : report.cases) {
        out << cr.case_id << ',' << to_string(cr.kind) << ',' << cr.n_users << ','
            << cr.n_servers << ',' << cr.dc.core << ',' << cr.dc.ram << ',';
        if (cr.skipped) {
            out << ",,,,,skipped\n";
            continue;
        }
        out << cr.score_mean << ',' << cr.score_stddev << ',' << cr.reference_score << ',';
        if (cr.pg_mean) {
            out << *cr.pg_mean << ',' << cr.pg_stddev;
        } else {
            out << "undefined,";
        }
        out << ',' << cr.mean_timesteps << '\n';
    }
    return out.str();
}

std::string sensitivity_to_csv(const std::vector<SensitivityRow>& rows) {
    std::ostringstream out;
    out << "parameter,value,pg_distributed,pg_centralized,pg_overall\n";
    for (const SensitivityRow& row : rows) {
        out << row.parameter << ',' << row.value << ',';
        if (row.pg_distributed) out << *row.pg_distributed;
        out << ',';
        if (row.pg_centralized) out << *row.pg_centralized;
        out << ',';
        if (row.pg_overall) out << *row.pg_overall;
        out << '\n';
    }
    return out.str();
}

}  // namespace eua
