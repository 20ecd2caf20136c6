#include "ramsey/canonical.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Canonicalization works on a symmetric label matrix: 0 for a non-edge,
// 1+color for an edge. A plain graph is the palette-1 case.
using Matrix = std::vector<std::vector<std::uint8_t>>;

struct IrSearch {
  const Matrix& mat;
  int n;
  std::string best;

  // Color refinement; colors are normalized to even ranks so an
  // individualized vertex (odd rank) sorts just before its old cell.
  void refine(std::vector<int>& color) const {
    while (true) {
      std::vector<std::vector<int>> key(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::pair<int, int>> nb;
        nb.reserve(n - 1);
        for (int u = 0; u < n; ++u)
          if (u != v) nb.emplace_back(mat[v][u], color[u]);
        std::sort(nb.begin(), nb.end());
        key[v].push_back(color[v]);
        for (auto [a, b] : nb) {
          key[v].push_back(a);
          key[v].push_back(b);
        }
      }
      std::map<std::vector<int>, int> rank;
      for (int v = 0; v < n; ++v) rank[key[v]] = 0;
      int next = 0;
      for (auto& [k, r] : rank) r = 2 * next++;
      std::vector<int> fresh(n);
      for (int v = 0; v < n; ++v) fresh[v] = rank[key[v]];
      if (fresh == color) return;
      color = std::move(fresh);
    }
  }

  // A partition is perfect when every cell is internally uniform and every
  // cell pair is uniform; then any color-respecting vertex order yields the
  // same matrix and no branching is needed.
  bool perfect(const std::vector<std::vector<int>>& cells) const {
    for (const auto& cell : cells) {
      if (cell.size() < 2) continue;
      std::uint8_t val = mat[cell[0]][cell[1]];
      for (std::size_t i = 0; i < cell.size(); ++i)
        for (std::size_t j = i + 1; j < cell.size(); ++j)
          if (mat[cell[i]][cell[j]] != val) return false;
    }
    return true;
  }

  bool cross_uniform(const std::vector<std::vector<int>>& cells) const {
    for (std::size_t a = 0; a < cells.size(); ++a)
      for (std::size_t b = a + 1; b < cells.size(); ++b) {
        std::uint8_t val = mat[cells[a][0]][cells[b][0]];
        for (int u : cells[a])
          for (int v : cells[b])
            if (mat[u][v] != val) return false;
      }
    return true;
  }

  std::string emit(const std::vector<int>& order) const {
    std::string s;
    s.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 + 8);
    s += std::to_string(n);
    s += ':';
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += static_cast<char>('0' + mat[order[i]][order[j]]);
    return s;
  }

  void rec(std::vector<int> color) {
    refine(color);
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    std::vector<std::vector<int>> cells;
    cells.reserve(by_color.size());
    for (auto& [c, vs] : by_color) cells.push_back(vs);

    if (perfect(cells) && cross_uniform(cells)) {
      std::vector<int> order;
      order.reserve(n);
      for (const auto& cell : cells)
        for (int v : cell) order.push_back(v);
      std::string s = emit(order);
      if (best.empty() || s < best) best = s;
      return;
    }
    for (const auto& cell : cells) {
      if (cell.size() < 2) continue;
      for (int v : cell) {
        std::vector<int> next = color;
        next[v] = color[v] - 1;
        rec(std::move(next));
      }
      return;  // individualize only the first non-singleton cell
    }
  }
};

std::string canonical_of_matrix(const Matrix& mat, int n, int max_order) {
  if (n > max_order)
    throw CapacityError("canonical labeling capped at order " + std::to_string(max_order) +
                        ", got " + std::to_string(n));
  if (n == 0) return "0:";
  IrSearch search{mat, n, {}};
  search.rec(std::vector<int>(n, 0));
  return search.best;
}

}  // namespace

std::string canonical_form(const Graph& g, int max_order) {
  int n = g.order();
  Matrix mat(n, std::vector<std::uint8_t>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) mat[u][v] = 1;
  return canonical_of_matrix(mat, n, max_order);
}

std::string canonical_form(const EdgeColoring& c, int max_order) {
  int n = c.graph().order();
  if (c.palette() > 8) throw CapacityError("colored canonical labels support at most 8 colors");
  Matrix mat(n, std::vector<std::uint8_t>(n, 0));
  const auto& es = c.edges();
  const auto& cols = c.colors();
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    mat[u][v] = mat[v][u] = static_cast<std::uint8_t>(1 + cols[i]);
  }
  return canonical_of_matrix(mat, n, max_order);
}

}  // namespace ramsey
