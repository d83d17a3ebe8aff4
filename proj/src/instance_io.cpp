#include "eua/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace eua {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
}

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("malformed instance document: ") + e.what());
    }
    const CaseKind kind = case_kind_from_string(doc.at("kind").get<std::string>());

    std::vector<User> users;
    for (const json& ju : doc.at("users")) {
        User u;
        u.id = ju.at("id").get<int>();
        u.position = {ju.at("x").get<double>(), ju.at("y").get<double>()};
        u.demand = {ju.at("core").get<double>(), ju.at("ram").get<double>()};
        users.push_back(u);
    }
    std::vector<Server> servers;
    for (const json& js : doc.at("servers")) {
        Server s;
        s.id = js.at("id").get<int>();
        s.position = {js.at("x").get<double>(), js.at("y").get<double>()};
        s.capacity = {js.at("core").get<double>(), js.at("ram").get<double>()};
        s.coverage_radius = js.value("radius", 0.0);
        servers.push_back(s);
    }

    std::string label = doc.value("id", "");
    if (doc.contains("coverage")) {
        std::vector<std::uint8_t> cov;
        cov.reserve(users.size() * servers.size());
        for (const json& row : doc.at("coverage")) {
            for (const json& cell : row) cov.push_back(cell.get<bool>() ? 1 : 0);
        }
        Instance inst(std::move(users), std::move(servers), kind, std::move(cov));
        inst.id = std::move(label);
        return inst;
    }
    Instance inst(std::move(users), std::move(servers), kind);
    inst.id = std::move(label);
    return inst;
}

std::string render_instance(const Instance& inst) {
    json doc;
    if (!inst.id.empty()) doc["id"] = inst.id;
    doc["kind"] = to_string(inst.kind());
    json users = json::array();
    for (const User& u : inst.users()) {
        users.push_back({{"id", u.id},
                         {"x", u.position.x},
                         {"y", u.position.y},
                         {"core", u.demand.core},
                         {"ram", u.demand.ram}});
    }
    doc["users"] = std::move(users);
    json servers = json::array();
    for (const Server& s : inst.servers()) {
        json js = {{"id", s.id},
                   {"x", s.position.x},
                   {"y", s.position.y},
                   {"core", s.capacity.core},
                   {"ram", s.capacity.ram}};
        if (inst.kind() == CaseKind::distributed) js["radius"] = s.coverage_radius;
        servers.push_back(std::move(js));
    }
    doc["servers"] = std::move(servers);
    if (inst.has_explicit_coverage()) {
        json cov = json::array();
        for (int i = 0; i < inst.n_users(); ++i) {
            json row = json::array();
            for (int j = 0; j < inst.n_servers(); ++j) row.push_back(inst.covered(i, j));
            cov.push_back(std::move(row));
        }
        doc["coverage"] = std::move(cov);
    }
    return doc.dump(2) + "\n";
}

Instance load_instance(const std::filesystem::path& path) {
    Instance inst = parse_instance(read_file(path));
    if (inst.id.empty()) inst.id = path.stem().string();
    return inst;
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
    write_file(path, render_instance(inst));
}

std::vector<std::string> parse_manifest(const std::string& text) {
    json doc = json::parse(text);
    std::vector<std::string> files;
    for (const json& f : doc.at("cases")) files.push_back(f.get<std::string>());
    if (files.empty()) throw std::runtime_error("manifest lists no cases");
    return files;
}

std::string render_manifest(const std::vector<std::string>& files) {
    json doc;
    doc["cases"] = files;
    return doc.dump(2) + "\n";
}

std::vector<std::string> load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_file(path));
}

}  // namespace eua
