#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ramsey/forest.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Total assignment of every edge of a host graph to one of `palette` colors.
/// Color classes are spanning subgraphs; by convention color 0 is the forest
/// target when one is present. Treat instances as immutable values.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(Graph graph, int palette, std::vector<std::uint8_t> colors);

  /// Builds the assignment by evaluating `color_of` on every edge (u < v).
  static EdgeColoring from_function(Graph graph, int palette,
                                    const std::function<int(int, int)>& color_of);

  const Graph& graph() const { return graph_; }
  int palette() const { return palette_; }

  /// Edges in the host's lexicographic order; colors_ is parallel to it.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::uint8_t>& colors() const { return colors_; }

  int color_of(int u, int v) const;

  /// Spanning subgraph carrying exactly the color-c edges.
  Graph color_class(int c) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  Graph graph_;
  int palette_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint8_t> colors_;
};

/// True iff class 0 omits `forest` (when given) and class i omits
/// K_{cliques[i]} for every i. The palette must equal
/// (forest ? 1 : 0) + cliques.size().
bool is_free_coloring(const EdgeColoring& c, const std::optional<Forest>& forest,
                      const std::vector<int>& cliques);

}  // namespace ramsey
