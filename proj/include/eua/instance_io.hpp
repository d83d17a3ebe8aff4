#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "eua/instance.hpp"

namespace eua {

// Instance documents are JSON with self-describing keys:
//   { "kind": "distributed",
//     "users":   [ {"id":0, "x":1.5, "y":2.0, "core":4, "ram":2}, ... ],
//     "servers": [ {"id":0, "x":0.0, "y":0.0, "core":16, "ram":32,
//                   "radius":12.5}, ... ],
//     "coverage": [[true,false],...] }        // optional override
// For distributed cases without an explicit coverage block the matrix is
// recomputed from positions and radii on parse.

Instance parse_instance(const std::string& text);
std::string render_instance(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

// A case-set manifest lists instance files in suite order:
//   { "cases": ["case_00.json", ...] }
std::vector<std::string> parse_manifest(const std::string& text);
std::string render_manifest(const std::vector<std::string>& files);
std::vector<std::string> load_manifest(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace eua
