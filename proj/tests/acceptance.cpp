// Acceptance gate for the solver suite. Each numbered criterion prints a
// single PASS/FAIL line with its measured value and pinned tolerance; the
// process exits nonzero when any criterion fails.
//
// Criteria 2/3/4/9/10 run against the pinned 30-case suite
// (configs/acceptance_suite.json) with the shipped solver parameters
// (configs/default_params.json). Criterion 6 exercises the dynamics at the
// in-code default network/heuristic parameters.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "eua/config_io.hpp"
#include "eua/generator.hpp"
#include "eua/harness.hpp"
#include "eua/instance_io.hpp"
#include "eua/oracle.hpp"
#include "eua/solver.hpp"

using namespace eua;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("[%2d] %s %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    va_list args;
    va_start(args, f);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), f, args);
    va_end(args);
    return buf;
}

// ---- criterion 1: feasibility over >= 1000 solves, zero tolerance ----
void check_feasibility(const SolverConfig& shipped) {
    const int n_solves = 1000;
    int violations = 0;
    for (int i = 0; i < n_solves; ++i) {
        Rng rng(mix_seed(0xFEA51B1E, i));
        GeneratorParams p;
        p.n_users = static_cast<int>(rng.next_int(4, 15));
        p.n_servers = static_cast<int>(rng.next_int(1, 5));
        p.kind = rng.next_int(0, 1) ? CaseKind::distributed : CaseKind::centralized;
        p.r_target = {rng.next_real(0.5, 1.5), rng.next_real(0.5, 1.5)};
        const Instance inst = generate_instance(p, mix_seed(0x9E11E7A7, i));

        SolverConfig config = shipped;
        config.seed = mix_seed(0x5EED, i);
        const SolveResult res = solve(inst, config);
        const EvalResult eval = evaluate_allocation(inst, res.best);
        bool ok = eval.feasible && static_cast<int>(res.best.assignment.size()) == p.n_users;
        for (int u = 0; ok && u < p.n_users; ++u) {
            const int j = res.best.assignment[u];
            if (j != Allocation::kNone && (j < 0 || j >= p.n_servers || !inst.covered(u, j))) {
                ok = false;
            }
        }
        if (!ok) ++violations;
    }
    report(1, violations == 0,
           fmt("feasibility: %d/%d solves feasible (tolerance: 0 violations)",
               n_solves - violations, n_solves));
}

// ---- criterion 5: exact oracle vs. independent enumeration ----
void check_oracle() {
    const int n_instances = 200;
    int mismatches = 0;
    double max_diff = 0.0;
    for (int i = 0; i < n_instances; ++i) {
        Rng rng(mix_seed(0x0AC1E, i));
        GeneratorParams p;
        p.n_users = static_cast<int>(rng.next_int(2, 8));
        p.n_servers = static_cast<int>(rng.next_int(1, 3));  // (n_s+1)^n_u <= 4^8 << 2^20
        p.kind = rng.next_int(0, 1) ? CaseKind::distributed : CaseKind::centralized;
        p.r_target = {rng.next_real(0.5, 1.5), rng.next_real(0.5, 1.5)};
        const Instance inst = generate_instance(p, mix_seed(0xB07E, i));

        const OracleResult exact = exact_solve(inst);
        const testutil::BruteResult brute = testutil::brute_force_solve(inst);
        const double diff = std::fabs(exact.score - brute.score);
        max_diff = std::max(max_diff, diff);
        if (!(exact.optimal && diff <= 1e-12 &&
              evaluate_allocation(inst, exact.allocation).feasible)) {
            ++mismatches;
        }
    }
    report(5, mismatches == 0,
           fmt("oracle vs. enumeration: %d/%d instances agree, max |score diff| %.2e "
               "(tolerance 1e-12)",
               n_instances - mismatches, n_instances, max_diff));
}

// ---- criterion 6: dynamics invariants at default parameters ----
void check_dynamics_invariants() {
    // distributed layout with genuinely uncovered pairs
    std::vector<User> users;
    std::vector<Server> servers;
    for (int i = 0; i < 8; ++i) {
        users.push_back({i, {5.0 + 10.0 * i, 10.0}, {2, 3}});
    }
    servers.push_back({0, {10.0, 10.0}, {20, 20}, 18.0});
    servers.push_back({1, {50.0, 10.0}, {20, 20}, 18.0});
    servers.push_back({2, {80.0, 10.0}, {20, 20}, 15.0});
    const Instance inst(users, servers, CaseKind::distributed);

    HeuristicParams hp;  // in-code defaults
    hp.b0 = -30.0;
    const LoadbiasCurve curve = build_loadbias(hp);
    NetworkParams np;  // in-code defaults
    Rng rng(0xD15C0);
    NetworkState state = init_network(inst.n_users(), inst.n_servers(), np, rng);

    const int n_steps = 100000;
    long muted_activations = 0;
    bool one_hot_ok = true;
    double max_row_sum_err = 0.0;
    Allocation alloc = decode(state.activation);
    for (int t = 0; t < n_steps; ++t) {
        const Matrix I = external_inputs(inst, alloc, curve, hp);
        step(state, I, rng);
        const Matrix conf = confidences(state);
        for (int u = 0; u < state.activation.rows; ++u) {
            int ones = 0;
            double sum = 0.0;
            for (int m = 0; m < state.activation.cols; ++m) {
                const double a = state.activation.at(u, m);
                if (a == 1.0) ++ones;
                else if (a != 0.0) one_hot_ok = false;
                sum += conf.at(u, m);
                if (m < inst.n_servers() && a == 1.0 && !inst.covered(u, m)) {
                    ++muted_activations;
                }
            }
            if (ones != 1) one_hot_ok = false;
            max_row_sum_err = std::max(max_row_sum_err, std::fabs(sum - 1.0));
        }
        alloc = decode(state.activation);
    }
    const bool pass = one_hot_ok && max_row_sum_err <= 1e-12 && muted_activations == 0;
    report(6, pass,
           fmt("dynamics invariants over %d steps: one-hot %s, max softmax row-sum error "
               "%.2e (<= 1e-12), muted activations %ld (tolerance 0)",
               n_steps, one_hot_ok ? "ok" : "violated", max_row_sum_err, muted_activations));
}

// ---- criterion 7: loadbias shape contract ----
void check_loadbias(const HeuristicParams& hp) {
    const LoadbiasCurve curve = build_loadbias(hp);
    const double fc = curve.f_c();

    const bool anchor0 = std::fabs(curve.eval(0.0) - hp.y1) <= 1e-9;
    const bool anchor_fc = std::fabs(curve.eval(fc) - hp.y_min) <= 1e-6;
    // left limit at f_c is the exponential branch's value there; the right
    // limit is the linear branch's intercept, which is y_min exactly
    const bool continuous = std::fabs(curve.eval(fc) - hp.y_min) <= 1e-9;

    // grid scan: unique maximum within +-0.02 of f0
    double best_f = 0.0, best_v = -1e300;
    bool unique_max = true;
    for (double f = 0.0; f <= fc + 1e-12; f += 0.001) {
        const double v = curve.eval(f);
        if (v > best_v) {
            best_v = v;
            best_f = f;
        }
    }
    for (double f = 0.0; f <= fc + 1e-12; f += 0.001) {
        if (curve.eval(f) == best_v && std::fabs(f - hp.f0) > 0.02) unique_max = false;
    }
    const bool peak = std::fabs(best_f - hp.f0) <= 0.02 && unique_max;

    bool decreasing = true;
    double prev = curve.eval(hp.f0);
    for (double f = hp.f0 + 0.001; f <= fc; f += 0.001) {
        const double v = curve.eval(f);
        if (!(v < prev)) decreasing = false;
        prev = v;
    }

    const bool pass = anchor0 && anchor_fc && continuous && peak && decreasing;
    report(7, pass,
           fmt("loadbias shape: curve(0)=y1 %s (1e-9), peak at %.3f vs f0=%.2f (+-0.02, "
               "unique %s), curve(f_c)=y_min %s (1e-6), continuous %s (1e-9), strictly "
               "decreasing on (f0,f_c] %s",
               anchor0 ? "ok" : "violated", best_f, hp.f0, unique_max ? "yes" : "no",
               anchor_fc ? "ok" : "violated", continuous ? "ok" : "violated",
               decreasing ? "ok" : "violated"));
}

// ---- criterion 8: byte-identical result documents ----
void check_determinism(const std::vector<Instance>& cases, const SolverConfig& shipped) {
    std::vector<Instance> subset(cases.begin(), cases.begin() + 6);
    SolverConfig config = shipped;
    config.seed = 0xD0C5;
    const SuiteReport serial = run_suite(subset, config, 2, 20.0, 1);
    const SuiteReport parallel = run_suite(subset, config, 2, 20.0, 4);
    const bool across_jobs =
        suite_report_to_json(serial).dump(2) == suite_report_to_json(parallel).dump(2) &&
        suite_report_to_csv(serial) == suite_report_to_csv(parallel);

    const SolveResult a = solve(cases[0], config);
    const SolveResult b = solve(cases[0], config);
    const bool consecutive =
        result_to_json(cases[0], config, a).dump(2) == result_to_json(cases[0], config, b).dump(2) &&
        trace_to_csv(a.trace) == trace_to_csv(b.trace);

    report(8, across_jobs && consecutive,
           fmt("determinism: consecutive runs byte-identical %s, worker counts 1 vs 4 "
               "byte-identical %s",
               consecutive ? "yes" : "no", across_jobs ? "yes" : "no"));
}

}  // namespace

int main() {
    const std::string config_dir = EUA_CONFIG_DIR;
    const SolverConfig shipped = load_config(config_dir + "/default_params.json");
    const SuiteGenConfig suite_cfg =
        load_suite_gen_config(config_dir + "/acceptance_suite.json");
    const std::vector<Instance> cases = build_suite_cases(suite_cfg);

    SolverConfig config = shipped;
    config.seed = suite_cfg.seed;

    // criteria 2 + 3: quality KPI and score tracking on the pinned suite
    const auto t0 = std::chrono::steady_clock::now();
    const SuiteReport rpt = run_suite(cases, config, 5, 20.0);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(2, rpt.mean_pg_overall <= 20.0 && !rpt.partial && elapsed <= 600.0,
           fmt("quality KPI: mean PG %.2f%% (<= 20%%; distributed %.2f%%, centralized "
               "%.2f%%), evaluation %.1f s (<= 600 s)",
               rpt.mean_pg_overall, rpt.mean_pg_distributed, rpt.mean_pg_centralized,
               elapsed));
    report(3, rpt.pearson_r >= 0.95,
           fmt("score tracking: Pearson r %.4f (>= 0.95)", rpt.pearson_r));

    // criterion 4: convergence budget, same seeds as the suite evaluation
    {
        int stable = 0, total = 0;
        bool budget_ok = true;
        for (std::size_t ci = 0; ci < cases.size(); ++ci) {
            for (int r = 0; r < 5; ++r) {
                SolverConfig run_cfg = config;
                run_cfg.seed = mix_seed(mix_seed(config.seed, ci), r);
                const SolveResult res = solve(cases[ci], run_cfg);
                for (const B0Trace& tr : res.trace.runs) {
                    ++total;
                    if (tr.termination == Termination::stable) ++stable;
                }
                if (res.trace.total_timesteps() >
                    static_cast<std::int64_t>(config.b0_schedule.size()) *
                        config.max_timesteps_per_b0) {
                    budget_ok = false;
                }
            }
        }
        const double frac = 100.0 * stable / total;
        report(4, frac >= 95.0 && budget_ok,
               fmt("convergence: %d/%d b0 runs stable within %d steps (%.1f%%, >= 95%%), "
                   "step budget respected %s",
                   stable, total, config.max_timesteps_per_b0, frac,
                   budget_ok ? "yes" : "no"));
    }

    check_feasibility(shipped);
    check_oracle();
    check_dynamics_invariants();
    check_loadbias(shipped.heuristics);
    check_determinism(cases, shipped);

    // criterion 9: baseline dominance on the pinned suite
    {
        double model_sum = 0.0, greedy_sum = 0.0;
        for (std::size_t ci = 0; ci < cases.size(); ++ci) {
            model_sum += rpt.cases[ci].score_mean;
            greedy_sum += greedy_solve(cases[ci]).score;
        }
        const double model_mean = model_sum / static_cast<double>(cases.size());
        const double greedy_mean = greedy_sum / static_cast<double>(cases.size());
        report(9, model_mean <= greedy_mean,
               fmt("baseline dominance: mean solver score %.4f <= mean greedy score %.4f",
                   model_mean, greedy_mean));
    }

    // criterion 10: sensitivity directions on the centralized half
    {
        const auto k3_rows = sensitivity_sweep(cases, config, 5, "k3", {0.0, 30.0});
        const auto k2_rows = sensitivity_sweep(cases, config, 5, "k2", {0.0, 20.0});
        const double k3_off = *k3_rows[0].pg_centralized;
        const double k3_ref = *k3_rows[1].pg_centralized;
        const double k2_off = *k2_rows[0].pg_centralized;
        const double k2_ref = *k2_rows[1].pg_centralized;
        report(10, k3_off > k3_ref && k2_off > k2_ref,
               fmt("sensitivity: centralized PG k3=0 %.2f%% > k3=30 %.2f%%; k2=0 %.2f%% > "
                   "k2=20 %.2f%%",
                   k3_off, k3_ref, k2_off, k2_ref));
    }

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria PASS\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
