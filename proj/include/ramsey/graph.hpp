#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey {

class Forest;

/// Hard cap on graph order: adjacency is one 64-bit neighbor mask per vertex,
/// which covers every desk-scale instance handled by the oracle.
inline constexpr int kMaxOrder = 64;

/// Undirected simple graph on vertices 0..order-1.
/// Invariants: adjacency symmetric, loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  int order() const { return order_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Neighbor mask of v.
  std::uint64_t neighbors(int v) const;
  int degree(int v) const;
  int edge_count() const;
  std::uint64_t vertex_mask() const;
  bool is_complete() const;

  /// Edge list with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  const std::vector<std::uint64_t>& rows() const { return adj_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// K_n.
Graph build_complete(int n);

/// Complete multipartite graph; part i occupies a contiguous vertex range,
/// in the order the sizes are given.
Graph build_complete_multipartite(const std::vector<int>& sizes);

/// K_n with one extra vertex (index n) adjacent to the first k core vertices.
/// k == n yields a graph isomorphic to K_{n+1}.
Graph build_pendant_star(int n, int k);

Graph complement(const Graph& g);

/// True iff g has m mutually adjacent vertices. Pivoting backtracking over
/// neighbor-set intersections.
bool contains_clique(const Graph& g, int m);

/// True iff g contains vertex-disjoint copies of every component of f.
/// Color classes are spanning, so order-1 components are satisfied by any
/// unused vertex.
bool contains_forest(const Graph& g, const Forest& f);

}  // namespace ramsey
