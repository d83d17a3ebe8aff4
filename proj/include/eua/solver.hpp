#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "eua/heuristics.hpp"
#include "eua/instance.hpp"

namespace eua {

struct SolverConfig {
    std::vector<double> b0_schedule{-180, -50, -40, -30, -20, -10};
    int max_timesteps_per_b0 = 150;
    int stability_window = 5;
    std::uint64_t seed = 0;
    NetworkParams network;
    HeuristicParams heuristics;

    void validate() const {
        if (b0_schedule.empty()) throw std::invalid_argument("b0 schedule must be non-empty");
        if (stability_window < 1) throw std::invalid_argument("stability_window must be >= 1");
        if (max_timesteps_per_b0 < 1) throw std::invalid_argument("max_timesteps_per_b0 must be >= 1");
        network.validate();
        heuristics.validate();
    }
};

enum class Termination { stable, step_cap };

struct StepRecord {
    int timestep;
    double raw_score;       // score of the decoded pre-repair allocation
    double repaired_score;
};

struct B0Trace {
    double b0;
    std::vector<StepRecord> steps;
    Termination termination;
    double best_score;  // best feasible repaired score seen in this run
};

struct SolveTrace {
    std::vector<B0Trace> runs;
    std::int64_t total_timesteps() const {
        std::int64_t n = 0;
        for (const auto& r : runs) n += static_cast<std::int64_t>(r.steps.size());
        return n;
    }
};

// Read out a one-hot activation matrix as an allocation; the trailing
// column is the no-allocation unit.
Allocation decode(const Matrix& activation);

// Evict users from constraint-violating servers until the allocation is
// feasible: uncovered assignments are dropped outright, then the largest
// user (ties: lowest id) leaves each overfilled server until it fits.
Allocation repair(const Instance& inst, const Allocation& alloc,
                  LargenessMode largeness = LargenessMode::core);

// True iff the last `window` activation matrices are all identical.
bool has_stabilized(const std::deque<Matrix>& activation_history, int window);

struct B0RunResult {
    std::optional<Allocation> best;
    double best_score = 0.0;
    B0Trace trace;
};

B0RunResult run_single_b0(const Instance& inst, const SolverConfig& config, double b0, Rng& rng);

struct SolveResult {
    Allocation best;
    EvalResult eval;
    double chosen_b0 = 0.0;
    SolveTrace trace;
};

// Full solve: one network run per scheduled b0 (independent seeds derived
// from config.seed), returning the lowest-score feasible allocation found.
SolveResult solve(const Instance& inst, const SolverConfig& config);

}  // namespace eua
