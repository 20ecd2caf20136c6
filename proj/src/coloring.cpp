#include "ramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

EdgeColoring::EdgeColoring(Graph graph, int palette, std::vector<std::uint8_t> colors)
    : graph_(std::move(graph)), palette_(palette), edges_(graph_.edges()), colors_(std::move(colors)) {
  if (palette_ < 0 || palette_ > 255) throw std::invalid_argument("palette out of range");
  if (colors_.size() != edges_.size())
    throw std::invalid_argument("coloring must assign exactly one color per edge");
  for (auto c : colors_)
    if (c >= palette_) throw std::invalid_argument("edge color outside the palette");
}

EdgeColoring EdgeColoring::from_function(Graph graph, int palette,
                                         const std::function<int(int, int)>& color_of) {
  std::vector<std::uint8_t> colors;
  auto es = graph.edges();
  colors.reserve(es.size());
  for (auto [u, v] : es) {
    int c = color_of(u, v);
    if (c < 0 || c >= palette) throw std::invalid_argument("edge color outside the palette");
    colors.push_back(static_cast<std::uint8_t>(c));
  }
  return EdgeColoring(std::move(graph), palette, std::move(colors));
}

int EdgeColoring::color_of(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v});
  if (it == edges_.end() || *it != std::pair{u, v})
    throw std::invalid_argument("queried pair is not an edge of the host");
  return colors_[static_cast<std::size_t>(it - edges_.begin())];
}

Graph EdgeColoring::color_class(int c) const {
  if (c < 0 || c >= palette_) throw std::invalid_argument("color index outside the palette");
  Graph g(graph_.order());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (colors_[i] == c) g.add_edge(edges_[i].first, edges_[i].second);
  return g;
}

bool is_free_coloring(const EdgeColoring& c, const std::optional<Forest>& forest,
                      const std::vector<int>& cliques) {
  int expected = (forest.has_value() ? 1 : 0) + static_cast<int>(cliques.size());
  if (c.palette() != expected)
    throw std::invalid_argument("palette size must match the number of targets");
  int offset = 0;
  if (forest.has_value()) {
    if (contains_forest(c.color_class(0), *forest)) return false;
    offset = 1;
  }
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (contains_clique(c.color_class(offset + static_cast<int>(i)), cliques[i])) return false;
  return true;
}

}  // namespace ramsey
