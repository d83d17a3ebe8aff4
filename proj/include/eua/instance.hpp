#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eua {

// Two resource dimensions: CPU cores and memory. Component-wise arithmetic.
struct ResourceVector {
    double core = 0.0;
    double ram = 0.0;

    ResourceVector operator+(const ResourceVector& o) const { return {core + o.core, ram + o.ram}; }
    ResourceVector operator-(const ResourceVector& o) const { return {core - o.core, ram - o.ram}; }
    ResourceVector& operator+=(const ResourceVector& o) {
        core += o.core;
        ram += o.ram;
        return *this;
    }
    ResourceVector& operator-=(const ResourceVector& o) {
        core -= o.core;
        ram -= o.ram;
        return *this;
    }
    ResourceVector operator/(const ResourceVector& o) const {
        if (o.core == 0.0 || o.ram == 0.0) {
            throw std::domain_error("ResourceVector division by zero component");
        }
        return {core / o.core, ram / o.ram};
    }
    bool operator==(const ResourceVector&) const = default;

    bool fits_within(const ResourceVector& cap) const {
        return core <= cap.core && ram <= cap.ram;
    }
    double max_component() const { return core > ram ? core : ram; }
    double norm() const { return std::sqrt(core * core + ram * ram); }
};

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

inline double distance(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

struct User {
    int id = 0;
    Point position;
    ResourceVector demand;
};

struct Server {
    int id = 0;
    Point position;
    ResourceVector capacity;
    double coverage_radius = 0.0;
};

enum class CaseKind { distributed, centralized };

std::string to_string(CaseKind kind);
CaseKind case_kind_from_string(const std::string& s);

// Which resource component ranks the "largeness" of users and servers.
enum class LargenessMode {
    core,      // always the CORE component
    auto_dc,   // the component with the higher demand-capacity ratio
};

// A static EUA snapshot: users, servers and the coverage relation.
// Immutable after construction; safe to share across workers.
class Instance {
public:
    Instance(std::vector<User> users, std::vector<Server> servers, CaseKind kind);
    // Explicit coverage override (row-major n_u x n_s), e.g. from a file.
    Instance(std::vector<User> users, std::vector<Server> servers, CaseKind kind,
             std::vector<std::uint8_t> coverage);

    const std::vector<User>& users() const { return users_; }
    const std::vector<Server>& servers() const { return servers_; }
    CaseKind kind() const { return kind_; }
    int n_users() const { return static_cast<int>(users_.size()); }
    int n_servers() const { return static_cast<int>(servers_.size()); }

    bool covered(int user, int server) const {
        return coverage_[static_cast<std::size_t>(user) * servers_.size() + server] != 0;
    }
    const std::vector<std::uint8_t>& coverage() const { return coverage_; }
    bool has_explicit_coverage() const { return explicit_coverage_; }

    std::string id;  // optional label, carried through reports

private:
    void validate() const;

    std::vector<User> users_;
    std::vector<Server> servers_;
    CaseKind kind_;
    std::vector<std::uint8_t> coverage_;  // row-major n_u x n_s
    bool explicit_coverage_ = false;
};

// Coverage matrix implied by positions and radii (centralized: all-true).
std::vector<std::uint8_t> geometric_coverage(const std::vector<User>& users,
                                             const std::vector<Server>& servers,
                                             CaseKind kind);

// Per-user server assignment; kNone leaves the user unallocated.
struct Allocation {
    static constexpr int kNone = -1;
    std::vector<int> assignment;

    explicit Allocation(int n_users = 0) : assignment(n_users, kNone) {}
    int size() const { return static_cast<int>(assignment.size()); }
    bool operator==(const Allocation&) const = default;
};

struct EvalResult {
    int allocated_users = 0;  // A_u
    int servers_used = 0;     // U_s
    bool feasible = false;
    double score = 0.0;
};

// score = -3 * A_u / n_u + U_s / n_s, computed whether or not the
// allocation is feasible; feasibility is reported separately.
EvalResult evaluate_allocation(const Instance& inst, const Allocation& alloc);

// r = sum(demands) / sum(capacities), component-wise
ResourceVector dc_ratio(const Instance& inst);

// D_i = n_u * d_i / sum(d) - 1 (zero mean per component)
std::vector<ResourceVector> relative_demands(const Instance& inst);
// C_j = n_s * c_j / sum(c) - 1
std::vector<ResourceVector> relative_capacities(const Instance& inst);

// f_j = assigned demand / capacity per server; empty server -> (0,0).
// Overfill is representable (components may exceed 1).
std::vector<ResourceVector> fill_degrees(const Instance& inst, const Allocation& alloc);

// Per-server component-wise demand sums.
std::vector<ResourceVector> server_loads(const Instance& inst, const Allocation& alloc);

// The component index (0=core, 1=ram) that defines largeness for the
// given instance under the given mode.
int largeness_component(const Instance& inst, LargenessMode mode);

inline double component(const ResourceVector& v, int comp) {
    return comp == 0 ? v.core : v.ram;
}

}  // namespace eua
