#include "eua/instance.hpp"

#include <utility>

namespace eua {

std::string to_string(CaseKind kind) {
    return kind == CaseKind::distributed ? "distributed" : "centralized";
}

CaseKind case_kind_from_string(const std::string& s) {
    if (s == "distributed") return CaseKind::distributed;
    if (s == "centralized") return CaseKind::centralized;
    throw std::invalid_argument("unknown case kind: " + s);
}

std::vector<std::uint8_t> geometric_coverage(const std::vector<User>& users,
                                             const std::vector<Server>& servers,
                                             CaseKind kind) {
    std::vector<std::uint8_t> cov(users.size() * servers.size(), 1);
    if (kind == CaseKind::distributed) {
        for (std::size_t i = 0; i < users.size(); ++i) {
            for (std::size_t j = 0; j < servers.size(); ++j) {
                cov[i * servers.size() + j] =
                    distance(users[i].position, servers[j].position) <=
                            servers[j].coverage_radius
                        ? 1
                        : 0;
            }
        }
    }
    return cov;
}

Instance::Instance(std::vector<User> users, std::vector<Server> servers, CaseKind kind)
    : users_(std::move(users)),
      servers_(std::move(servers)),
      kind_(kind),
      coverage_(geometric_coverage(users_, servers_, kind)) {
    validate();
}

Instance::Instance(std::vector<User> users, std::vector<Server> servers, CaseKind kind,
                   std::vector<std::uint8_t> coverage)
    : users_(std::move(users)),
      servers_(std::move(servers)),
      kind_(kind),
      coverage_(std::move(coverage)),
      explicit_coverage_(true) {
    if (coverage_.size() != users_.size() * servers_.size()) {
        throw std::invalid_argument("coverage matrix shape mismatch");
    }
    validate();
}

void Instance::validate() const {
    if (users_.empty() || servers_.empty()) {
        throw std::invalid_argument("instance needs at least one user and one server");
    }
    for (const User& u : users_) {
        if (u.demand.core < 0 || u.demand.ram < 0) {
            throw std::invalid_argument("negative user demand");
        }
        if (u.demand.core <= 0 && u.demand.ram <= 0) {
            throw std::invalid_argument("user demand must have a positive component");
        }
    }
    for (const Server& s : servers_) {
        if (s.capacity.core <= 0 || s.capacity.ram <= 0) {
            throw std::invalid_argument("server capacity components must be positive");
        }
        if (s.coverage_radius < 0) {
            throw std::invalid_argument("negative coverage radius");
        }
    }
    if (kind_ == CaseKind::centralized && !explicit_coverage_) {
        // all-true by construction
        return;
    }
}

EvalResult evaluate_allocation(const Instance& inst, const Allocation& alloc) {
    const int n_u = inst.n_users();
    const int n_s = inst.n_servers();
    if (alloc.size() != n_u) {
        throw std::invalid_argument("allocation shape mismatch");
    }
    EvalResult res;
    res.feasible = true;
    std::vector<ResourceVector> load(n_s);
    std::vector<int> count(n_s, 0);
    for (int i = 0; i < n_u; ++i) {
        const int j = alloc.assignment[i];
        if (j == Allocation::kNone) continue;
        if (j < 0 || j >= n_s) {
            throw std::invalid_argument("allocation server index out of range");
        }
        ++res.allocated_users;
        load[j] += inst.users()[i].demand;
        ++count[j];
        if (!inst.covered(i, j)) res.feasible = false;
    }
    for (int j = 0; j < n_s; ++j) {
        if (count[j] > 0) ++res.servers_used;
        if (!load[j].fits_within(inst.servers()[j].capacity)) res.feasible = false;
    }
    res.score = -3.0 * res.allocated_users / n_u +
                static_cast<double>(res.servers_used) / n_s;
    return res;
}

ResourceVector dc_ratio(const Instance& inst) {
    ResourceVector demand, capacity;
    for (const User& u : inst.users()) demand += u.demand;
    for (const Server& s : inst.servers()) capacity += s.capacity;
    return demand / capacity;  // throws on zero component
}

namespace {

template <typename T, typename GetVec>
std::vector<ResourceVector> relative_sizes(const std::vector<T>& entities, GetVec get) {
    ResourceVector total;
    for (const T& e : entities) total += get(e);
    if (total.core <= 0 || total.ram <= 0) {
        throw std::domain_error("relative sizes need a positive total per component");
    }
    const double n = static_cast<double>(entities.size());
    std::vector<ResourceVector> out;
    out.reserve(entities.size());
    for (const T& e : entities) {
        const ResourceVector v = get(e);
        out.push_back({n * v.core / total.core - 1.0, n * v.ram / total.ram - 1.0});
    }
    return out;
}

}  // namespace

std::vector<ResourceVector> relative_demands(const Instance& inst) {
    return relative_sizes(inst.users(), [](const User& u) { return u.demand; });
}

std::vector<ResourceVector> relative_capacities(const Instance& inst) {
    return relative_sizes(inst.servers(), [](const Server& s) { return s.capacity; });
}

std::vector<ResourceVector> server_loads(const Instance& inst, const Allocation& alloc) {
    if (alloc.size() != inst.n_users()) {
        throw std::invalid_argument("allocation shape mismatch");
    }
    std::vector<ResourceVector> load(inst.n_servers());
    for (int i = 0; i < inst.n_users(); ++i) {
        const int j = alloc.assignment[i];
        if (j != Allocation::kNone) load[j] += inst.users()[i].demand;
    }
    return load;
}

std::vector<ResourceVector> fill_degrees(const Instance& inst, const Allocation& alloc) {
    std::vector<ResourceVector> f = server_loads(inst, alloc);
    for (int j = 0; j < inst.n_servers(); ++j) {
        f[j] = f[j] / inst.servers()[j].capacity;
    }
    return f;
}

int largeness_component(const Instance& inst, LargenessMode mode) {
    if (mode == LargenessMode::core) return 0;
    const ResourceVector r = dc_ratio(inst);
    return r.ram > r.core ? 1 : 0;
}

}  // namespace eua
