#pragma once

// Independent brute-force reference implementations for the test suites.
// These deliberately avoid the library's search code paths.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "ramsey/forest.hpp"
#include "ramsey/graph.hpp"

namespace brute {

inline bool contains_clique(const ramsey::Graph& g, int m) {
  int n = g.order();
  if (m > n) return false;
  std::vector<int> pick(static_cast<std::size_t>(m));
  // enumerate all m-subsets
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a)
      for (int b = a + 1; b < m && ok; ++b)
        if (!g.has_edge(idx[a], idx[b])) ok = false;
    if (ok) return true;
    int pos = m - 1;
    while (pos >= 0 && idx[pos] == n - m + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int q = pos + 1; q < m; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// subgraph containment of an arbitrary pattern graph by trying every
// injective vertex map
inline bool contains_subgraph(const ramsey::Graph& host, const ramsey::Graph& pattern) {
  int n = host.order(), k = pattern.order();
  if (k > n) return false;
  auto pedges = pattern.edges();
  std::vector<int> image(static_cast<std::size_t>(k), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == k) return true;
    for (int h = 0; h < n; ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (auto [a, b] : pedges) {
        if (a == v && image[b] >= 0 && !host.has_edge(h, image[b])) ok = false;
        if (b == v && image[a] >= 0 && !host.has_edge(h, image[a])) ok = false;
        if (!ok) break;
      }
      if (!ok) continue;
      image[v] = h;
      used[h] = 1;
      if (self(self, v + 1)) return true;
      image[v] = -1;
      used[h] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool contains_forest(const ramsey::Graph& host, const ramsey::Forest& f) {
  return contains_subgraph(host, f.to_graph());
}

inline std::string adjacency_string(const ramsey::Graph& g, const std::vector<int>& perm) {
  std::string s;
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += g.has_edge(perm[i], perm[j]) ? '1' : '0';
  return s;
}

inline std::string canonical(const ramsey::Graph& g) {
  int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = adjacency_string(g, perm);
  while (std::next_permutation(perm.begin(), perm.end()))
    best = std::min(best, adjacency_string(g, perm));
  return best;
}

inline bool isomorphic(const ramsey::Graph& a, const ramsey::Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical(a) == canonical(b);
}

// all trees on `order` vertices up to isomorphism, via Prüfer enumeration
inline std::vector<ramsey::Tree> all_trees(int order) {
  using ramsey::Tree;
  if (order == 1) return {Tree::path(1)};
  if (order == 2) return {Tree::path(2)};
  std::vector<Tree> out;
  std::set<std::string> seen;
  std::vector<int> code(static_cast<std::size_t>(order - 2), 0);
  while (true) {
    Tree t = ramsey::prufer_decode(code);
    if (seen.insert(ramsey::tree_label(t)).second) out.push_back(t);
    int pos = order - 3;
    while (pos >= 0 && code[pos] == order - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  std::sort(out.begin(), out.end(),
            [](const Tree& a, const Tree& b) { return ramsey::tree_label(a) < ramsey::tree_label(b); });
  return out;
}

// all forests with the given total order range and minimum component order,
// as sorted multisets of trees
inline std::vector<ramsey::Forest> all_forests(int max_total, int min_component) {
  using ramsey::Forest;
  using ramsey::Tree;
  std::vector<std::vector<Tree>> trees_by_order(static_cast<std::size_t>(max_total) + 1);
  for (int n = min_component; n <= max_total; ++n) trees_by_order[n] = all_trees(n);
  std::vector<Forest> out;
  std::vector<Tree> cur;
  // components chosen with nondecreasing (order, label index) to avoid dupes
  auto rec = [&](auto&& self, int budget, int min_order, std::size_t min_idx) -> void {
    if (!cur.empty()) out.push_back(Forest(cur));
    for (int n = min_order; n <= budget; ++n) {
      const auto& pool = trees_by_order[n];
      for (std::size_t i = n == min_order ? min_idx : 0; i < pool.size(); ++i) {
        cur.push_back(pool[i]);
        self(self, budget - n, n, i);
        cur.pop_back();
      }
    }
  };
  rec(rec, max_total, min_component, 0);
  return out;
}

inline long long partition_count(int n, int max_parts, int largest = -1) {
  if (largest < 0) largest = n;
  if (n == 0) return 1;
  if (max_parts == 0) return 0;
  long long total = 0;
  for (int first = std::min(n, largest); first >= 1; --first)
    total += partition_count(n - first, max_parts - 1, first);
  return total;
}

}  // namespace brute
