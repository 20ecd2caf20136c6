#include <algorithm>
#include <bit>
#include <numeric>

#include "ramsey/forest.hpp"
#include "ramsey/graph.hpp"
#include "search_core.hpp"

namespace ramsey::detail {

namespace {

int popcount(std::uint64_t x) { return std::popcount(x); }

int pick_pivot(const Rows& adj, std::uint64_t cand) {
  int pivot = -1, best = -1;
  std::uint64_t rest = cand;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    int d = popcount(cand & adj[v]);
    if (d > best) {
      best = d;
      pivot = v;
    }
  }
  return pivot;
}

}  // namespace

bool clique_exists(const Rows& adj, std::uint64_t cand, int need) {
  if (need <= 0) return true;
  if (popcount(cand) < need) return false;
  if (need == 1) return true;
  // branch on vertices outside the pivot's neighborhood; a maximum clique is
  // maximal, so this covers existence
  int pivot = pick_pivot(adj, cand);
  std::uint64_t branch = cand & ~adj[pivot];
  while (branch) {
    int v = std::countr_zero(branch);
    branch &= branch - 1;
    if (clique_exists(adj, cand & adj[v], need - 1)) return true;
    cand &= ~(std::uint64_t{1} << v);
  }
  return false;
}

bool clique_through_edge(const Rows& adj, int u, int v, int m) {
  if (m <= 2) return true;
  return clique_exists(adj, adj[u] & adj[v], m - 2);
}

namespace {

// max matching of a tree by leaf-parent greedy (exact on forests)
int tree_matching(const CompiledComponent& c) {
  if (c.order < 2) return 0;
  std::vector<char> matched(c.order, 0);
  int count = 0;
  // process in reverse BFS order so children precede parents
  for (int pos = c.order - 1; pos >= 1; --pos) {
    int v = c.bfs_vertex[pos];
    int p = c.bfs_vertex[c.bfs_parent_pos[pos]];
    if (!matched[v] && !matched[p]) {
      matched[v] = matched[p] = 1;
      ++count;
    }
  }
  return count;
}

void bfs_order(const std::vector<std::vector<int>>& adj, int root, int forced_second,
               std::vector<int>& vertex, std::vector<int>& parent_pos) {
  int n = static_cast<int>(adj.size());
  vertex.clear();
  parent_pos.clear();
  std::vector<int> pos_of(n, -1);
  vertex.push_back(root);
  parent_pos.push_back(-1);
  pos_of[root] = 0;
  if (forced_second >= 0) {
    vertex.push_back(forced_second);
    parent_pos.push_back(0);
    pos_of[forced_second] = 1;
  }
  for (std::size_t head = 0; head < vertex.size(); ++head) {
    int v = vertex[head];
    for (int w : adj[v]) {
      if (pos_of[w] >= 0) continue;
      pos_of[w] = static_cast<int>(vertex.size());
      vertex.push_back(w);
      parent_pos.push_back(static_cast<int>(head));
    }
  }
}

CompiledComponent compile_component(const Tree& t, const std::string& label) {
  CompiledComponent c;
  c.order = t.order;
  c.label = label;
  c.edges = t.edges;
  c.adj.assign(t.order, {});
  for (auto [u, v] : t.edges) {
    c.adj[u].push_back(v);
    c.adj[v].push_back(u);
  }
  bfs_order(c.adj, 0, -1, c.bfs_vertex, c.bfs_parent_pos);
  for (auto [a, b] : t.edges) {
    CompiledComponent::Seeded s1, s2;
    bfs_order(c.adj, a, b, s1.vertex, s1.parent_pos);
    bfs_order(c.adj, b, a, s2.vertex, s2.parent_pos);
    c.seeded.push_back(std::move(s1));
    c.seeded.push_back(std::move(s2));
  }
  c.matching = tree_matching(c);
  return c;
}

struct Embedder {
  const Rows& adj;
  int order;
  const CompiledForest& cf;
  int skip = -1;       // component placed by the seeded step, excluded below
  bool seeding = false;

  // ordered placements per position of the component being placed
  std::vector<int> image;

  bool place_rest(int ci, std::uint64_t avail, int last_group, int last_min) {
    while (ci < static_cast<int>(cf.comps.size()) && ci == skip) ++ci;
    if (ci >= static_cast<int>(cf.comps.size())) return true;
    const CompiledComponent& c = cf.comps[ci];
    int remaining = 0;
    for (int j = ci; j < static_cast<int>(cf.comps.size()); ++j)
      if (j != skip) remaining += cf.comps[j].order;
    if (popcount(avail) < remaining) return false;
    if (c.order == 1) return true;  // only order-1 components remain; count suffices
    std::uint64_t pool = avail;
    if (cf.group[ci] == last_group) {
      // identical components are placed with strictly increasing minimum
      // vertex; restrict the pool above the previous minimum
      pool &= ~((std::uint64_t{2} << last_min) - 1);
    }
    return place_tree(ci, cf.comps[ci].bfs_parent_pos, 0, pool, avail, 0);
  }

  bool place_tree(int ci, const std::vector<int>& parents, int pos, std::uint64_t pool,
                  std::uint64_t avail, std::uint64_t placed) {
    const CompiledComponent& c = cf.comps[ci];
    if (pos == c.order) {
      if (seeding) {
        // seeded component done; place everything else around it
        seeding = false;
        bool ok = place_rest(0, avail, -1, -1);
        seeding = true;
        return ok;
      }
      int mn = std::countr_zero(placed);
      return place_rest(ci + 1, avail, cf.group[ci], mn);
    }
    std::uint64_t cand = parents[pos] < 0 ? pool : (pool & adj[image[parents[pos]]]);
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      std::uint64_t bit = std::uint64_t{1} << v;
      image[pos] = v;
      if (place_tree(ci, parents, pos + 1, pool & ~bit, avail & ~bit, placed | bit)) return true;
    }
    return false;
  }
};

bool capacity_filters(const Rows& adj, int order, const CompiledForest& cf) {
  if (cf.total > order) return false;
  if (cf.edge_total > 0) {
    int twice = 0;
    for (int v = 0; v < order; ++v) twice += popcount(adj[v]);
    if (twice / 2 < cf.edge_total) return false;
  }
  if (cf.comps.empty()) return true;
  // connected component sizes of the host, descending
  std::vector<int> sizes;
  std::uint64_t seen = 0;
  for (int v = 0; v < order; ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) continue;
    std::uint64_t comp = bit, frontier = bit;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int w = std::countr_zero(f);
        f &= f - 1;
        next |= adj[w];
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    sizes.push_back(popcount(comp));
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<int>());
  int matching_cap = 0;
  for (int s : sizes) matching_cap += s / 2;
  if (matching_cap < cf.matching_total) return false;
  // every forest component of order >= s must land inside a host component
  // of size >= s, so those host components must carry the whole demand
  std::size_t idx = 0;
  long long cap = 0;
  for (auto [s, demand] : cf.suffix_demand) {
    while (idx < sizes.size() && sizes[idx] >= s) cap += sizes[idx++];
    if (cap < demand) return false;
  }
  return true;
}

}  // namespace

CompiledForest compile_forest(const Forest& f) {
  CompiledForest cf;
  const auto& comps = f.components();
  const auto& labels = f.labels();
  std::vector<int> idx(comps.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (comps[a].order != comps[b].order) return comps[a].order > comps[b].order;
    return labels[a] > labels[b];
  });
  for (int i : idx) {
    cf.comps.push_back(compile_component(comps[i], labels[i]));
    cf.total += comps[i].order;
    cf.edge_total += static_cast<int>(comps[i].edges.size());
    if (comps[i].order == 1) ++cf.isolated;
  }
  cf.group.assign(cf.comps.size(), 0);
  for (std::size_t i = 1; i < cf.comps.size(); ++i) {
    bool same = cf.comps[i].order == cf.comps[i - 1].order && cf.comps[i].label == cf.comps[i - 1].label;
    cf.group[i] = same ? cf.group[i - 1] : cf.group[i - 1] + 1;
  }
  for (const auto& c : cf.comps) cf.matching_total += c.matching;
  // suffix demands per distinct order, descending
  int acc = 0;
  for (std::size_t i = 0; i < cf.comps.size(); ++i) {
    acc += cf.comps[i].order;
    bool last_of_order = i + 1 == cf.comps.size() || cf.comps[i + 1].order != cf.comps[i].order;
    if (last_of_order) cf.suffix_demand.emplace_back(cf.comps[i].order, acc);
  }
  return cf;
}

bool forest_fits(const Rows& adj, int order, const CompiledForest& cf) {
  if (!capacity_filters(adj, order, cf)) return false;
  std::uint64_t all = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  Embedder e{adj, order, cf, -1, false, {}};
  e.image.assign(cf.total == 0 ? 1 : static_cast<std::size_t>(cf.total), -1);
  return e.place_rest(0, all, -1, -1);
}

bool forest_fits_through_edge(const Rows& adj, int order, const CompiledForest& cf, int u, int v) {
  std::uint64_t ub = std::uint64_t{1} << u, vb = std::uint64_t{1} << v;
  if (!(adj[u] & vb)) return false;  // edge must be present
  if (!capacity_filters(adj, order, cf)) return false;
  std::uint64_t all = order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1;
  for (int ci = 0; ci < static_cast<int>(cf.comps.size()); ++ci) {
    const CompiledComponent& c = cf.comps[ci];
    if (ci > 0 && cf.group[ci] == cf.group[ci - 1]) continue;  // identical shape, same result
    for (const auto& s : c.seeded) {
      Embedder e{adj, order, cf, ci, true, {}};
      e.image.assign(static_cast<std::size_t>(std::max(cf.total, 2)), -1);
      e.image[0] = u;
      e.image[1] = v;
      std::uint64_t avail = all & ~(ub | vb);
      if (e.place_tree(ci, s.parent_pos, 2, avail, avail, ub | vb)) return true;
    }
  }
  return false;
}

}  // namespace ramsey::detail

namespace ramsey {

bool contains_forest(const Graph& g, const Forest& f) {
  if (f.empty()) return true;
  if (f.total_order() > g.order()) return false;
  detail::CompiledForest cf = detail::compile_forest(f);
  return detail::forest_fits(g.rows(), g.order(), cf);
}

}  // namespace ramsey
