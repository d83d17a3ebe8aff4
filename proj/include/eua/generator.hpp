#pragma once

#include <cstdint>

#include "eua/instance.hpp"

namespace eua {

// Synthetic EUA instance generator. Demands are sampled uniform-integer,
// capacities are sampled with relative heterogeneity and then rescaled so
// the realized demand-capacity ratio hits r_target exactly per component.
struct GeneratorParams {
    int n_users = 10;
    int n_servers = 3;
    CaseKind kind = CaseKind::centralized;

    // inclusive integer demand ranges per component
    int demand_core_min = 1, demand_core_max = 8;
    int demand_ram_min = 1, demand_ram_max = 8;

    // relative (pre-rescale) capacity heterogeneity per server
    double capacity_spread_min = 0.5, capacity_spread_max = 1.5;

    ResourceVector r_target{0.8, 0.8};

    // distributed-case geometry
    double area_size = 100.0;
    double radius_min = 10.0, radius_max = 25.0;
    int coverage_retries = 1000;  // per-user position resamples
};

Instance generate_instance(const GeneratorParams& params, std::uint64_t seed);

}  // namespace eua
