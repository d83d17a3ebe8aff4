#include "eua/solver.hpp"

#include <algorithm>

namespace eua {

Allocation decode(const Matrix& activation) {
    Allocation alloc(activation.rows);
    const int n_s = activation.cols - 1;
    for (int r = 0; r < activation.rows; ++r) {
        int active = -1;
        int ones = 0;
        for (int c = 0; c < activation.cols; ++c) {
            const double a = activation.at(r, c);
            if (a == 1.0) {
                active = c;
                ++ones;
            } else if (a != 0.0) {
                throw std::invalid_argument("activation row is not one-hot");
            }
        }
        if (ones != 1) throw std::invalid_argument("activation row is not one-hot");
        alloc.assignment[r] = active == n_s ? Allocation::kNone : active;
    }
    return alloc;
}

Allocation repair(const Instance& inst, const Allocation& alloc, LargenessMode largeness) {
    const int n_u = inst.n_users();
    const int n_s = inst.n_servers();
    if (alloc.size() != n_u) throw std::invalid_argument("allocation shape mismatch");
    const int comp = largeness_component(inst, largeness);

    Allocation repaired = alloc;
    for (int i = 0; i < n_u; ++i) {
        const int j = repaired.assignment[i];
        if (j != Allocation::kNone && !inst.covered(i, j)) {
            repaired.assignment[i] = Allocation::kNone;
        }
    }

    std::vector<ResourceVector> load = server_loads(inst, repaired);
    for (int j = 0; j < n_s; ++j) {
        const ResourceVector& cap = inst.servers()[j].capacity;
        while (!load[j].fits_within(cap)) {
            // evict the largest assigned user; ties broken by lowest id
            int victim = -1;
            double victim_size = -1.0;
            for (int i = 0; i < n_u; ++i) {
                if (repaired.assignment[i] != j) continue;
                const double size = component(inst.users()[i].demand, comp);
                if (size > victim_size) {
                    victim = i;
                    victim_size = size;
                }
            }
            // an overfilled server always has at least one assigned user
            repaired.assignment[victim] = Allocation::kNone;
            load[j] -= inst.users()[victim].demand;
        }
    }
    return repaired;
}

bool has_stabilized(const std::deque<Matrix>& history, int window) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (static_cast<int>(history.size()) < window) return false;
    const Matrix& last = history.back();
    for (int i = 2; i <= window; ++i) {
        if (history[history.size() - i] != last) return false;
    }
    return true;
}

B0RunResult run_single_b0(const Instance& inst, const SolverConfig& config, double b0, Rng& rng) {
    HeuristicParams hp = config.heuristics;
    hp.b0 = b0;
    const LoadbiasCurve curve = build_loadbias(hp);

    B0RunResult result;
    result.trace.b0 = b0;
    result.trace.termination = Termination::step_cap;

    NetworkState state = init_network(inst.n_users(), inst.n_servers(), config.network, rng);
    Allocation decoded = decode(state.activation);

    std::deque<Matrix> history;
    history.push_back(state.activation);

    for (int t = 1; t <= config.max_timesteps_per_b0; ++t) {
        const Matrix input = external_inputs(inst, decoded, curve, hp);
        step(state, input, rng);
        decoded = decode(state.activation);
        const Allocation repaired = repair(inst, decoded, hp.largeness);

        const double raw_score = evaluate_allocation(inst, decoded).score;
        const EvalResult rep = evaluate_allocation(inst, repaired);
        if (!result.best || rep.score < result.best_score) {
            result.best = repaired;
            result.best_score = rep.score;
        }
        result.trace.steps.push_back({t, raw_score, rep.score});

        history.push_back(state.activation);
        if (static_cast<int>(history.size()) > config.stability_window) history.pop_front();
        if (has_stabilized(history, config.stability_window)) {
            result.trace.termination = Termination::stable;
            break;
        }
    }
    result.trace.best_score = result.best_score;
    return result;
}

SolveResult solve(const Instance& inst, const SolverConfig& config) {
    config.validate();
    SolveResult out;
    out.best = Allocation(inst.n_users());  // empty allocation fallback, score 0
    out.eval = evaluate_allocation(inst, out.best);

    for (std::size_t bi = 0; bi < config.b0_schedule.size(); ++bi) {
        const double b0 = config.b0_schedule[bi];
        Rng rng(mix_seed(config.seed, bi));
        B0RunResult run = run_single_b0(inst, config, b0, rng);
        if (run.best && run.best_score < out.eval.score) {
            out.best = *run.best;
            out.eval = evaluate_allocation(inst, out.best);
            out.chosen_b0 = b0;
        }
        out.trace.runs.push_back(std::move(run.trace));
    }
    return out;
}

}  // namespace eua
