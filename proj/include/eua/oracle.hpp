#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "eua/instance.hpp"

namespace eua {

struct OracleResult {
    Allocation allocation;
    double score = 0.0;
    bool optimal = false;
    std::int64_t nodes_explored = 0;
};

// Raised when the branch-and-bound node budget runs out; carries the best
// incumbent found so far (explicitly non-optimal).
class OracleBudgetExhausted : public std::runtime_error {
public:
    OracleBudgetExhausted(OracleResult incumbent, std::int64_t budget)
        : std::runtime_error("exact solver exhausted its node budget (" +
                             std::to_string(budget) + " nodes)"),
          incumbent_(std::move(incumbent)) {}
    const OracleResult& incumbent() const { return incumbent_; }

private:
    OracleResult incumbent_;
};

// Depth-first branch and bound over per-user choices (covered servers or
// none), minimizing the scalarized score. Intended for desk-scale
// instances (n_u around 15, n_s around 5).
OracleResult exact_solve(const Instance& inst, std::int64_t node_budget = 10'000'000);

// Best-fit-decreasing style baseline: users ascending by largeness, each
// placed on the fullest open covered server that fits, opening the
// largest-capacity covered server only when nothing open fits.
OracleResult greedy_solve(const Instance& inst,
                          LargenessMode largeness = LargenessMode::core);

// PG = 100 * (model - reference) / |reference|; nullopt when the
// reference score is too close to zero for the ratio to be meaningful.
std::optional<double> performance_gap(double model_score, double reference_score);

}  // namespace eua
