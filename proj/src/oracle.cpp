#include "eua/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace eua {

namespace {

constexpr double kScoreEps = 1e-12;

struct BnB {
    const Instance& inst;
    std::int64_t budget;
    int n_u, n_s;
    double user_gain;    // score improvement per allocated user (3 / n_u)
    double server_cost;  // score cost per opened server (1 / n_s)

    std::vector<int> order;                 // users, descending demand
    std::vector<std::vector<int>> covered;  // covered server lists per user

    std::vector<ResourceVector> remaining;
    std::vector<int> occupancy;
    std::vector<int> assignment;  // by original user id

    double incumbent_score;
    std::vector<int> incumbent;
    std::int64_t nodes = 0;

    BnB(const Instance& instance, std::int64_t node_budget)
        : inst(instance),
          budget(node_budget),
          n_u(instance.n_users()),
          n_s(instance.n_servers()),
          user_gain(3.0 / instance.n_users()),
          server_cost(1.0 / instance.n_servers()),
          remaining(),
          occupancy(instance.n_servers(), 0),
          assignment(instance.n_users(), Allocation::kNone) {
        for (const Server& s : inst.servers()) remaining.push_back(s.capacity);
        covered.resize(n_u);
        for (int i = 0; i < n_u; ++i) {
            for (int j = 0; j < n_s; ++j) {
                if (inst.covered(i, j)) covered[i].push_back(j);
            }
        }
        order.resize(n_u);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const double sa = inst.users()[a].demand.core + inst.users()[a].demand.ram;
            const double sb = inst.users()[b].demand.core + inst.users()[b].demand.ram;
            return sa != sb ? sa > sb : a < b;
        });
    }

    // Optimistic completion: every remaining user that could individually
    // still fit somewhere is allocated for free, no new servers open.
    double bound(int depth, double partial) const {
        int assignable = 0;
        for (int d = depth; d < n_u; ++d) {
            const int u = order[d];
            for (int j : covered[u]) {
                if (inst.users()[u].demand.fits_within(remaining[j])) {
                    ++assignable;
                    break;
                }
            }
        }
        return partial - user_gain * assignable;
    }

    void dfs(int depth, double partial) {
        if (++nodes > budget) {
            OracleResult inc;
            inc.allocation.assignment = incumbent;
            inc.score = incumbent_score;
            inc.optimal = false;
            inc.nodes_explored = nodes;
            throw OracleBudgetExhausted(std::move(inc), budget);
        }
        if (depth == n_u) {
            if (partial < incumbent_score - kScoreEps) {
                incumbent_score = partial;
                incumbent = assignment;
            }
            return;
        }
        // quick bound: all remaining users allocated, no new servers
        if (partial - user_gain * (n_u - depth) >= incumbent_score - kScoreEps) return;
        if (bound(depth, partial) >= incumbent_score - kScoreEps) return;

        const int u = order[depth];
        const ResourceVector& d = inst.users()[u].demand;
        for (int j : covered[u]) {
            if (!d.fits_within(remaining[j])) continue;
            const double open_cost = occupancy[j] == 0 ? server_cost : 0.0;
            remaining[j] -= d;
            ++occupancy[j];
            assignment[u] = j;
            dfs(depth + 1, partial - user_gain + open_cost);
            assignment[u] = Allocation::kNone;
            --occupancy[j];
            remaining[j] += d;
        }
        dfs(depth + 1, partial);  // leave the user unallocated
    }
};

}  // namespace

OracleResult exact_solve(const Instance& inst, std::int64_t node_budget) {
    BnB bnb(inst, node_budget);

    // seed the incumbent with the greedy solution (or the empty one)
    const OracleResult greedy = greedy_solve(inst);
    bnb.incumbent_score = std::min(greedy.score, 0.0);
    bnb.incumbent = greedy.score <= 0.0 ? greedy.allocation.assignment
                                        : std::vector<int>(inst.n_users(), Allocation::kNone);

    bnb.dfs(0, 0.0);

    OracleResult out;
    out.allocation.assignment = std::move(bnb.incumbent);
    out.score = evaluate_allocation(inst, out.allocation).score;
    out.optimal = true;
    out.nodes_explored = bnb.nodes;
    return out;
}

OracleResult greedy_solve(const Instance& inst, LargenessMode largeness) {
    const int n_u = inst.n_users();
    const int n_s = inst.n_servers();
    const int comp = largeness_component(inst, largeness);

    std::vector<int> order(n_u);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const double sa = component(inst.users()[a].demand, comp);
        const double sb = component(inst.users()[b].demand, comp);
        return sa != sb ? sa < sb : a < b;
    });

    OracleResult out;
    out.allocation = Allocation(n_u);
    std::vector<ResourceVector> load(n_s);
    std::vector<bool> open(n_s, false);

    for (int u : order) {
        const ResourceVector& d = inst.users()[u].demand;
        int pick = -1;
        double pick_fill = -1.0;
        for (int j = 0; j < n_s; ++j) {
            if (!open[j] || !inst.covered(u, j)) continue;
            if (!(load[j] + d).fits_within(inst.servers()[j].capacity)) continue;
            const ResourceVector f = load[j] / inst.servers()[j].capacity;
            if (f.max_component() > pick_fill) {
                pick = j;
                pick_fill = f.max_component();
            }
        }
        if (pick < 0) {
            // open the largest-capacity covered server that fits
            double pick_cap = -1.0;
            for (int j = 0; j < n_s; ++j) {
                if (open[j] || !inst.covered(u, j)) continue;
                if (!d.fits_within(inst.servers()[j].capacity)) continue;
                const double cap = component(inst.servers()[j].capacity, comp);
                if (cap > pick_cap) {
                    pick = j;
                    pick_cap = cap;
                }
            }
        }
        if (pick >= 0) {
            out.allocation.assignment[u] = pick;
            load[pick] += d;
            open[pick] = true;
        }
    }
    out.score = evaluate_allocation(inst, out.allocation).score;
    out.optimal = false;
    return out;
}

std::optional<double> performance_gap(double model_score, double reference_score) {
    if (std::abs(reference_score) < 1e-9) return std::nullopt;
    return 100.0 * (model_score - reference_score) / std::abs(reference_score);
}

}  // namespace eua
