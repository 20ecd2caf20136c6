#pragma once

// Internal search kernels shared by the containment predicates and the
// arrowing oracle. Operates directly on adjacency rows so the oracle can
// mutate classes in place.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

class Forest;

namespace detail {

using Rows = std::vector<std::uint64_t>;

/// Clique of size `need` inside candidate set `cand` (all mutually adjacent
/// within adj). Pivoting branch-and-bound.
bool clique_exists(const Rows& adj, std::uint64_t cand, int need);

/// Clique of order m using edge (u,v); assumes the edge is present.
bool clique_through_edge(const Rows& adj, int u, int v, int m);

struct CompiledComponent {
  int order = 1;
  std::string label;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  // placement order for free embedding: order[0] is the root, parent_pos[i]
  // indexes the already-placed BFS parent
  std::vector<int> bfs_vertex;
  std::vector<int> bfs_parent_pos;
  // one seeded order per (edge, direction): first two placements are forced
  struct Seeded {
    std::vector<int> vertex;
    std::vector<int> parent_pos;
  };
  std::vector<Seeded> seeded;
  int matching = 0;
};

struct CompiledForest {
  std::vector<CompiledComponent> comps;  // sorted by decreasing (order, label)
  std::vector<int> group;                // identical components share a group id
  int total = 0;
  int edge_total = 0;
  int matching_total = 0;
  int isolated = 0;  // number of order-1 components
  // capacity demands: (component order s, total vertices in components of
  // order >= s), decreasing in s
  std::vector<std::pair<int, int>> suffix_demand;
};

CompiledForest compile_forest(const Forest& f);

/// Full containment check of the compiled forest in the graph given by adj
/// rows on `order` vertices (capacity filters, then backtracking embedding).
bool forest_fits(const Rows& adj, int order, const CompiledForest& cf);

/// Containment where some component edge must map onto (u,v). Sound test for
/// "containment appeared with this edge" because containment is monotone.
bool forest_fits_through_edge(const Rows& adj, int order, const CompiledForest& cf, int u, int v);

}  // namespace detail
}  // namespace ramsey
