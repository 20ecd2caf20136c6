#include "ramsey/json_io.hpp"

#include <fstream>

#include "ramsey/errors.hpp"

namespace ramsey {

using nlohmann::json;

json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return json{{"order", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("edges"))
    throw ParseError("graph object needs \"order\" and \"edges\"", 0);
  Graph g(j.at("order").get<int>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph edge must be a pair", 0);
    int u = e[0].get<int>(), v = e[1].get<int>();
    if (u >= v) throw ParseError("graph edges must satisfy u < v", 0);
    if (g.has_edge(u, v)) throw ParseError("duplicate edge", 0);
    g.add_edge(u, v);
  }
  return g;
}

json to_json(const EdgeColoring& c) {
  json edges = json::array();
  const auto& es = c.edges();
  const auto& cols = c.colors();
  for (std::size_t i = 0; i < es.size(); ++i)
    edges.push_back({es[i].first, es[i].second, cols[i]});
  return json{{"order", c.graph().order()}, {"colors", c.palette()}, {"edges", edges}};
}

EdgeColoring coloring_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("colors") || !j.contains("edges"))
    throw ParseError("coloring object needs \"order\", \"colors\" and \"edges\"", 0);
  Graph g(j.at("order").get<int>());
  int palette = j.at("colors").get<int>();
  std::vector<std::tuple<int, int, int>> triples;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3) throw ParseError("coloring edge must be [u,v,c]", 0);
    int u = e[0].get<int>(), v = e[1].get<int>(), c = e[2].get<int>();
    if (u >= v) throw ParseError("coloring edges must satisfy u < v", 0);
    if (g.has_edge(u, v)) throw ParseError("duplicate edge", 0);
    g.add_edge(u, v);
    triples.emplace_back(u, v, c);
  }
  return EdgeColoring::from_function(g, palette, [&](int u, int v) {
    for (auto [a, b, c] : triples)
      if (a == u && b == v) return c;
    return -1;  // unreachable: every edge of g came from a triple
  });
}

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what(), 0);
  }
}

}  // namespace

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

EdgeColoring load_coloring(const std::string& path) {
  return coloring_from_json(read_json_file(path));
}

}  // namespace ramsey
