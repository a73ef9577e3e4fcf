#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "crystal/graph.hpp"

namespace crystal {

class PerfectCrystal;

// Serialization is normalizing: nodes sorted by (depth, id), edges by
// (src, color, dst).  Loading and re-serializing a document reproduces it
// byte for byte.
nlohmann::ordered_json graph_to_json(const CrystalGraph& g);
CrystalGraph graph_from_json(const nlohmann::ordered_json& j);

std::string graph_to_string(const CrystalGraph& g);  // 2-space indent, trailing newline
CrystalGraph graph_from_string(const std::string& text);

// Same document schema with weight/highest null and synthetic node ids.
nlohmann::ordered_json perfect_to_json(const PerfectCrystal& pc);

// One colored arrow per edge, label=<color>, highest node double-circled.
void write_dot(const CrystalGraph& g, std::ostream& os);
void write_dot(const PerfectCrystal& pc, std::ostream& os);

}  // namespace crystal
