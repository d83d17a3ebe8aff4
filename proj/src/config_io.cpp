#include "eua/config_io.hpp"

#include "eua/instance_io.hpp"

namespace eua {

using nlohmann::json;

namespace {

std::string largeness_to_string(LargenessMode m) {
    return m == LargenessMode::core ? "core" : "auto";
}

LargenessMode largeness_from_string(const std::string& s) {
    if (s == "core") return LargenessMode::core;
    if (s == "auto") return LargenessMode::auto_dc;
    throw std::invalid_argument("unknown largeness mode: " + s);
}

}  // namespace

json config_to_json(const SolverConfig& c) {
    return json{
        {"network",
         {{"alpha", c.network.alpha},
          {"w_self", c.network.w_self},
          {"w_lat", c.network.w_lat},
          {"bias", c.network.bias}}},
        {"heuristics",
         {{"y1", c.heuristics.y1},
          {"y_min", c.heuristics.y_min},
          {"f0", c.heuristics.f0},
          {"k_e", c.heuristics.k_e},
          {"k", c.heuristics.k},
          {"k0", c.heuristics.k0},
          {"k1", c.heuristics.k1},
          {"k2", c.heuristics.k2},
          {"k3", c.heuristics.k3},
          {"largeness", largeness_to_string(c.heuristics.largeness)}}},
        {"b0_schedule", c.b0_schedule},
        {"max_timesteps_per_b0", c.max_timesteps_per_b0},
        {"stability_window", c.stability_window},
        {"seed", c.seed},
    };
}

SolverConfig config_from_json(const json& doc) {
    SolverConfig c;
    if (doc.contains("network")) {
        const json& n = doc.at("network");
        c.network.alpha = n.value("alpha", c.network.alpha);
        c.network.w_self = n.value("w_self", c.network.w_self);
        c.network.w_lat = n.value("w_lat", c.network.w_lat);
        c.network.bias = n.value("bias", c.network.bias);
    }
    if (doc.contains("heuristics")) {
        const json& h = doc.at("heuristics");
        c.heuristics.y1 = h.value("y1", c.heuristics.y1);
        c.heuristics.y_min = h.value("y_min", c.heuristics.y_min);
        c.heuristics.f0 = h.value("f0", c.heuristics.f0);
        c.heuristics.k_e = h.value("k_e", c.heuristics.k_e);
        c.heuristics.k = h.value("k", c.heuristics.k);
        c.heuristics.k0 = h.value("k0", c.heuristics.k0);
        c.heuristics.k1 = h.value("k1", c.heuristics.k1);
        c.heuristics.k2 = h.value("k2", c.heuristics.k2);
        c.heuristics.k3 = h.value("k3", c.heuristics.k3);
        c.heuristics.largeness =
            largeness_from_string(h.value("largeness", std::string("core")));
    }
    if (doc.contains("b0_schedule")) {
        c.b0_schedule = doc.at("b0_schedule").get<std::vector<double>>();
    }
    c.max_timesteps_per_b0 = doc.value("max_timesteps_per_b0", c.max_timesteps_per_b0);
    c.stability_window = doc.value("stability_window", c.stability_window);
    c.seed = doc.value("seed", c.seed);
    c.validate();
    return c;
}

SolverConfig load_config(const std::filesystem::path& path) {
    return config_from_json(json::parse(read_file(path)));
}

void save_config(const SolverConfig& config, const std::filesystem::path& path) {
    write_file(path, config_to_json(config).dump(2) + "\n");
}

namespace {

json gen_params_to_json(const GeneratorParams& p) {
    return json{
        {"demand_core_min", p.demand_core_min}, {"demand_core_max", p.demand_core_max},
        {"demand_ram_min", p.demand_ram_min},   {"demand_ram_max", p.demand_ram_max},
        {"capacity_spread_min", p.capacity_spread_min},
        {"capacity_spread_max", p.capacity_spread_max},
        {"area_size", p.area_size},
        {"radius_min", p.radius_min},
        {"radius_max", p.radius_max},
    };
}

void gen_params_from_json(const json& doc, GeneratorParams& p) {
    p.demand_core_min = doc.value("demand_core_min", p.demand_core_min);
    p.demand_core_max = doc.value("demand_core_max", p.demand_core_max);
    p.demand_ram_min = doc.value("demand_ram_min", p.demand_ram_min);
    p.demand_ram_max = doc.value("demand_ram_max", p.demand_ram_max);
    p.capacity_spread_min = doc.value("capacity_spread_min", p.capacity_spread_min);
    p.capacity_spread_max = doc.value("capacity_spread_max", p.capacity_spread_max);
    p.area_size = doc.value("area_size", p.area_size);
    p.radius_min = doc.value("radius_min", p.radius_min);
    p.radius_max = doc.value("radius_max", p.radius_max);
}

}  // namespace

json suite_gen_config_to_json(const SuiteGenConfig& c) {
    return json{
        {"n_distributed", c.n_distributed},
        {"n_centralized", c.n_centralized},
        {"seed", c.seed},
        {"distributed",
         {{"nu_min", c.nu_min_distributed},
          {"nu_max", c.nu_max_distributed},
          {"ns_min", c.ns_min_distributed},
          {"ns_max", c.ns_max_distributed},
          {"r_min", c.r_min_distributed},
          {"r_max", c.r_max_distributed},
          {"params", gen_params_to_json(c.distributed_params)}}},
        {"centralized",
         {{"nu_min", c.nu_min_centralized},
          {"nu_max", c.nu_max_centralized},
          {"ns_min", c.ns_min_centralized},
          {"ns_max", c.ns_max_centralized},
          {"r_min", c.r_min_centralized},
          {"r_max", c.r_max_centralized},
          {"params", gen_params_to_json(c.centralized_params)}}},
    };
}

SuiteGenConfig suite_gen_config_from_json(const json& doc) {
    SuiteGenConfig c;
    c.n_distributed = doc.value("n_distributed", c.n_distributed);
    c.n_centralized = doc.value("n_centralized", c.n_centralized);
    c.seed = doc.value("seed", c.seed);
    if (doc.contains("distributed")) {
        const json& d = doc.at("distributed");
        c.nu_min_distributed = d.value("nu_min", c.nu_min_distributed);
        c.nu_max_distributed = d.value("nu_max", c.nu_max_distributed);
        c.ns_min_distributed = d.value("ns_min", c.ns_min_distributed);
        c.ns_max_distributed = d.value("ns_max", c.ns_max_distributed);
        c.r_min_distributed = d.value("r_min", c.r_min_distributed);
        c.r_max_distributed = d.value("r_max", c.r_max_distributed);
        if (d.contains("params")) gen_params_from_json(d.at("params"), c.distributed_params);
    }
    if (doc.contains("centralized")) {
        const json& d = doc.at("centralized");
        c.nu_min_centralized = d.value("nu_min", c.nu_min_centralized);
        c.nu_max_centralized = d.value("nu_max", c.nu_max_centralized);
        c.ns_min_centralized = d.value("ns_min", c.ns_min_centralized);
        c.ns_max_centralized = d.value("ns_max", c.ns_max_centralized);
        c.r_min_centralized = d.value("r_min", c.r_min_centralized);
        c.r_max_centralized = d.value("r_max", c.r_max_centralized);
        if (d.contains("params")) gen_params_from_json(d.at("params"), c.centralized_params);
    }
    return c;
}

SuiteGenConfig load_suite_gen_config(const std::filesystem::path& path) {
    return suite_gen_config_from_json(json::parse(read_file(path)));
}

}  // namespace eua
