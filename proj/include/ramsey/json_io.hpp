#pragma once

#include <json.hpp>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

// Graph file:    { "order": n, "edges": [[u,v], ...] }   with u < v, sorted.
// Coloring file: { "order": n, "colors": p, "edges": [[u,v,c], ...] }.

nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const nlohmann::json& j);

Graph load_graph(const std::string& path);
EdgeColoring load_coloring(const std::string& path);

}  // namespace ramsey
