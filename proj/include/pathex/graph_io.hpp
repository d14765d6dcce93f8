#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pathex/graph.hpp"

namespace pathex {

/// graph6 encoding as used by nauty (header-free form).
std::string to_graph6(const SimpleGraph& g);
SimpleGraph from_graph6(std::string_view text);

/// {"n": int, "edges": [[i, j], ...]} with 1-indexed endpoints.
nlohmann::json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::json& j);

}  // namespace pathex
