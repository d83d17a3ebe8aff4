#include "eua/heuristics.hpp"

#include <cmath>

#include "eua/kernels.hpp"

namespace eua {

// The exponential branch is built from two pieces joined at the peak:
//   f in [0, f0]:  y1 + (y_peak - y1) * (1 - e^{-k_e f}) / (1 - e^{-k_e f0})
//   f in (f0,f_c]: y_peak - y_peak * (e^{k_e (f - f0)} - 1)
// with y_peak = 2 * y1. This keeps the anchors the curve parameters name:
// value y1 at zero usage, a unique maximum at f0, and a steep drop that
// crosses y_min at f_c, where the linear branch takes over.
LoadbiasCurve::LoadbiasCurve(const HeuristicParams& p)
    : y1_(p.y1), y_min_(p.y_min), f0_(p.f0), k_e_(p.k_e), k_(p.k) {
    p.validate();
    if (!(k_e_ > 0.0)) {
        throw std::invalid_argument("loadbias: k_e must be positive for the curve to rise to f0");
    }
    y_peak_ = 2.0 * y1_;
    rise_norm_ = 1.0 - std::exp(-k_e_ * f0_);

    // locate f_c by bisection on the drop branch
    const auto drop = [this](double f) {
        return y_peak_ - y_peak_ * (std::exp(k_e_ * (f - f0_)) - 1.0);
    };
    double hi = f0_ + 0.1;
    while (drop(hi) > y_min_) {
        hi += 0.1;
        if (hi > f0_ + 50.0) {
            throw std::invalid_argument(
                "loadbias: drop branch never reaches y_min; curve lacks a crossover f_c > f0");
        }
    }
    double lo = f0_;
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        (drop(mid) > y_min_ ? lo : hi) = mid;
    }
    f_c_ = 0.5 * (lo + hi);
}

double LoadbiasCurve::eval(double f) const {
    if (f <= f0_) {
        return y1_ + (y_peak_ - y1_) * (1.0 - std::exp(-k_e_ * f)) / rise_norm_;
    }
    if (f <= f_c_) {
        return y_peak_ - y_peak_ * (std::exp(k_e_ * (f - f0_)) - 1.0);
    }
    return y_min_ + k_ * (f - f_c_);
}

LoadbiasCurve build_loadbias(const HeuristicParams& params) {
    return LoadbiasCurve(params);
}

double uncovered_input(const HeuristicParams& params) {
    return 2.0 * params.y_min;
}

Matrix cosine_similarities(const Instance& inst, const Allocation& alloc) {
    const int n_u = inst.n_users();
    const int n_s = inst.n_servers();
    const std::vector<ResourceVector> load = server_loads(inst, alloc);

    // split demands into component arrays so the per-server sweep over
    // users is a single scale2 kernel call
    std::vector<double> d_core(n_u), d_ram(n_u), d_norm(n_u);
    for (int i = 0; i < n_u; ++i) {
        d_core[i] = inst.users()[i].demand.core;
        d_ram[i] = inst.users()[i].demand.ram;
        d_norm[i] = inst.users()[i].demand.norm();
    }

    const auto& ops = kernels::active_ops();
    Matrix theta(n_u, n_s);
    std::vector<double> dots(n_u);
    for (int j = 0; j < n_s; ++j) {
        ResourceVector rem = inst.servers()[j].capacity - load[j];
        if (rem.core < 0) rem.core = 0;
        if (rem.ram < 0) rem.ram = 0;
        const double rem_norm = rem.norm();
        if (rem_norm == 0.0) {
            for (int i = 0; i < n_u; ++i) theta.at(i, j) = 0.0;
            continue;
        }
        ops.scale2(dots.data(), d_core.data(), d_ram.data(), rem.core, rem.ram,
                   static_cast<std::size_t>(n_u));
        for (int i = 0; i < n_u; ++i) {
            theta.at(i, j) = d_norm[i] > 0 ? dots[i] / (d_norm[i] * rem_norm) : 0.0;
        }
    }
    return theta;
}

Matrix allocation_input(const Instance& inst, const Allocation& alloc,
                        const LoadbiasCurve& curve, const HeuristicParams& p) {
    const int n_u = inst.n_users();
    const int n_s = inst.n_servers();
    const int comp = largeness_component(inst, p.largeness);
    const std::vector<ResourceVector> D = relative_demands(inst);
    const std::vector<ResourceVector> C = relative_capacities(inst);
    const std::vector<ResourceVector> fills = fill_degrees(inst, alloc);
    const Matrix theta = cosine_similarities(inst, alloc);
    const double muted = uncovered_input(p);

    Matrix input(n_u, n_s);
    for (int j = 0; j < n_s; ++j) {
        const double server_term = curve(fills[j]) + p.k2 * component(C[j], comp) - p.b3();
        for (int i = 0; i < n_u; ++i) {
            input.at(i, j) = inst.covered(i, j)
                                 ? server_term - p.k1 * component(D[i], comp) +
                                       p.k3 * theta.at(i, j)
                                 : muted;
        }
    }
    return input;
}

std::vector<double> no_alloc_input(const Instance& inst, const HeuristicParams& p) {
    const int comp = largeness_component(inst, p.largeness);
    const double r = component(dc_ratio(inst), comp);
    const std::vector<ResourceVector> D = relative_demands(inst);
    std::vector<double> input(inst.n_users());
    for (int i = 0; i < inst.n_users(); ++i) {
        input[i] = p.k0 * r * component(D[i], comp) + p.b0;
    }
    return input;
}

Matrix external_inputs(const Instance& inst, const Allocation& alloc,
                       const LoadbiasCurve& curve, const HeuristicParams& p) {
    const int n_u = inst.n_users();
    const int n_s = inst.n_servers();
    const Matrix alloc_in = allocation_input(inst, alloc, curve, p);
    const std::vector<double> none_in = no_alloc_input(inst, p);

    Matrix input(n_u, n_s + 1);
    for (int i = 0; i < n_u; ++i) {
        for (int j = 0; j < n_s; ++j) input.at(i, j) = alloc_in.at(i, j);
        input.at(i, n_s) = none_in[i];
    }
    return input;
}

}  // namespace eua
