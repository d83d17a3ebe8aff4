#pragma once

#include <stdexcept>
#include <vector>

#include "eua/dynamics.hpp"
#include "eua/instance.hpp"

namespace eua {

struct HeuristicParams {
    // loadbias curve
    double y1 = 20.0;     // value at zero server usage
    double y_min = -90.0; // lowest exponential-branch value (negative)
    double f0 = 0.9;      // peak fill degree
    double k_e = 12.0;    // curve steepness
    double k = -200.0;    // linear-branch slope past f_c

    // component weights
    double k0 = 10.0;  // no-allocation demand weight
    double k1 = 10.0;  // user size
    double k2 = 20.0;  // server size
    double k3 = 30.0;  // cosine similarity

    double b0 = 0.0;   // no-allocation baseline, set per sweep value

    LargenessMode largeness = LargenessMode::core;

    // b3 is fixed at half of k3, centering the cosine term
    double b3() const { return 0.5 * k3; }

    void validate() const {
        if (!(y1 > 0.0)) throw std::invalid_argument("y1 must be positive");
        if (!(y_min < 0.0)) throw std::invalid_argument("y_min must be negative");
        if (!(f0 > 0.0 && f0 <= 1.0)) throw std::invalid_argument("f0 must be in (0,1]");
        if (k1 < 0 || k2 < 0 || k3 < 0) throw std::invalid_argument("k1..k3 must be non-negative");
    }
};

// Piecewise reward-over-fill-degree curve: an exponential rise from y1 at
// zero usage to a peak at f0, an exponential drop reaching y_min at f_c,
// and a linear tail with slope k beyond f_c.
class LoadbiasCurve {
public:
    explicit LoadbiasCurve(const HeuristicParams& params);

    // evaluated at f = max(f_core, f_ram)
    double operator()(const ResourceVector& f_pair) const {
        return eval(f_pair.max_component());
    }
    double eval(double f) const;

    double f_c() const { return f_c_; }
    double peak_value() const { return y_peak_; }

private:
    double y1_, y_min_, f0_, k_e_, k_;
    double y_peak_;      // curve value at f0
    double rise_norm_;   // 1 - exp(-k_e * f0)
    double f_c_;         // crossover to the linear branch
};

LoadbiasCurve build_loadbias(const HeuristicParams& params);

// Large negative input muting units whose user-server pair is uncovered.
double uncovered_input(const HeuristicParams& params);

// theta_ij between each user demand and each server's remaining space,
// with negative remaining components clamped to zero first.
Matrix cosine_similarities(const Instance& inst, const Allocation& alloc);

// I_ij = loadbias(f_j) - k1*D_i + k2*C_j + k3*theta_ij - b3 (covered pairs)
Matrix allocation_input(const Instance& inst, const Allocation& alloc,
                        const LoadbiasCurve& curve, const HeuristicParams& params);

// I_{i,ns+1} = k0 * r * D_i + b0, static for a fixed b0
std::vector<double> no_alloc_input(const Instance& inst, const HeuristicParams& params);

// Full n_u x (n_s + 1) input matrix, recomputed each timestep from the
// current decoded allocation.
Matrix external_inputs(const Instance& inst, const Allocation& alloc,
                       const LoadbiasCurve& curve, const HeuristicParams& params);

}  // namespace eua
