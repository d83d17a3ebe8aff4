#include "eua/generator.hpp"

#include <stdexcept>

#include "eua/rng.hpp"

namespace eua {

Instance generate_instance(const GeneratorParams& p, std::uint64_t seed) {
    if (p.n_users < 1 || p.n_servers < 1) {
        throw std::invalid_argument("generator needs n_users >= 1 and n_servers >= 1");
    }
    if (p.demand_core_min < 0 || p.demand_ram_min < 0 ||
        p.demand_core_max < p.demand_core_min || p.demand_ram_max < p.demand_ram_min) {
        throw std::invalid_argument("bad demand ranges");
    }
    if (p.r_target.core <= 0 || p.r_target.ram <= 0) {
        throw std::invalid_argument("r_target components must be positive");
    }
    Rng rng(seed);

    std::vector<User> users(p.n_users);
    ResourceVector demand_sum;
    for (int i = 0; i < p.n_users; ++i) {
        users[i].id = i;
        do {
            users[i].demand.core =
                static_cast<double>(rng.next_int(p.demand_core_min, p.demand_core_max));
            users[i].demand.ram =
                static_cast<double>(rng.next_int(p.demand_ram_min, p.demand_ram_max));
        } while (users[i].demand.core <= 0 && users[i].demand.ram <= 0);
        demand_sum += users[i].demand;
    }
    if (demand_sum.core <= 0 || demand_sum.ram <= 0) {
        throw std::invalid_argument("demand ranges give a zero total component");
    }

    std::vector<Server> servers(p.n_servers);
    ResourceVector raw_sum;
    for (int j = 0; j < p.n_servers; ++j) {
        servers[j].id = j;
        servers[j].capacity.core = rng.next_real(p.capacity_spread_min, p.capacity_spread_max);
        servers[j].capacity.ram = rng.next_real(p.capacity_spread_min, p.capacity_spread_max);
        raw_sum += servers[j].capacity;
    }
    // rescale so the realized DC ratio equals r_target per component
    const double scale_core = demand_sum.core / (p.r_target.core * raw_sum.core);
    const double scale_ram = demand_sum.ram / (p.r_target.ram * raw_sum.ram);
    for (Server& s : servers) {
        s.capacity.core *= scale_core;
        s.capacity.ram *= scale_ram;
    }

    if (p.kind == CaseKind::distributed) {
        for (Server& s : servers) {
            s.position = {rng.next_real(0, p.area_size), rng.next_real(0, p.area_size)};
            s.coverage_radius = rng.next_real(p.radius_min, p.radius_max);
        }
        for (User& u : users) {
            bool covered = false;
            for (int attempt = 0; attempt < p.coverage_retries && !covered; ++attempt) {
                u.position = {rng.next_real(0, p.area_size), rng.next_real(0, p.area_size)};
                for (const Server& s : servers) {
                    if (distance(u.position, s.position) <= s.coverage_radius) {
                        covered = true;
                        break;
                    }
                }
            }
            if (!covered) {
                throw std::runtime_error(
                    "generator could not place user " + std::to_string(u.id) +
                    " inside any server's coverage within the retry budget");
            }
        }
    }

    return Instance(std::move(users), std::move(servers), p.kind);
}

}  // namespace eua
