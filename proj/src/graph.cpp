#include "ramsey/graph.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ramsey/errors.hpp"
#include "search_core.hpp"

namespace ramsey {

Graph::Graph(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
  if (order > kMaxOrder)
    throw CapacityError("graph order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(kMaxOrder));
  adj_.assign(static_cast<std::size_t>(order), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && (adj_[u] >> v) & 1;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
}

std::uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::uint64_t Graph::vertex_mask() const {
  if (order_ == 0) return 0;
  if (order_ == 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << order_) - 1;
}

bool Graph::is_complete() const {
  for (int v = 0; v < order_; ++v)
    if (std::popcount(adj_[v]) != order_ - 1) return false;
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < order_; ++u) {
    std::uint64_t higher = adj_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph build_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph build_complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  Graph g(n);
  // part boundaries are contiguous: part i = [start_i, start_i + size_i)
  int a_start = 0;
  for (std::size_t a = 0; a < sizes.size(); ++a) {
    int b_start = a_start + sizes[a];
    for (std::size_t b = a + 1; b < sizes.size(); ++b) {
      for (int u = a_start; u < a_start + sizes[a]; ++u)
        for (int v = b_start; v < b_start + sizes[b]; ++v) g.add_edge(u, v);
      b_start += sizes[b];
    }
    a_start += sizes[a];
  }
  return g;
}

Graph build_pendant_star(int n, int k) {
  if (n < 0) throw std::invalid_argument("core order must be nonnegative");
  if (k < 0 || k > n) throw std::invalid_argument("pendant degree must lie in 0..n");
  Graph g(n + 1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (int v = 0; v < k; ++v) g.add_edge(n, v);
  return g;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

bool contains_clique(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("clique order must be at least 1");
  if (m > g.order()) return false;
  return detail::clique_exists(g.rows(), g.vertex_mask(), m);
}

}  // namespace ramsey
