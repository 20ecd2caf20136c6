#pragma once

#include <optional>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/forest.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class SymmetryMode { automatic, on, off };

struct SearchLimits {
  /// Total node budget, split evenly across the fixed subtree slices so that
  /// outcomes do not depend on the worker count.
  long long node_budget = 2'000'000'000;
  /// Wall-clock budget in seconds; 0 disables it. Unlike the node budget this
  /// is inherently scheduling-dependent.
  double time_budget_seconds = 0.0;
  int workers = 1;
  /// Automatic: interchangeable-vertex reduction on hosts of order >= 8.
  SymmetryMode symmetry = SymmetryMode::automatic;
};

/// Does every palette-coloring of graph's edges contain the forest in color 0
/// or K_{cliques[i]} in clique color i?
struct ArrowQuery {
  Graph graph;
  std::optional<Forest> forest;  // color-0 target when present
  std::vector<int> cliques;      // targets of the remaining colors, in order
  SearchLimits limits;
};

enum class SearchOutcome { found_free, exhausted, budget_exceeded };

struct SearchStats {
  long long nodes = 0;
  long long prunes = 0;
  double elapsed_seconds = 0.0;
  long long slices = 0;
};

struct FreeSearchResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::optional<EdgeColoring> coloring;
  SearchStats stats;
};

/// Depth-first search over edges in lexicographic order, colors ascending.
/// Every clique assignment is checked through the new edge only; forest
/// assignments are checked incrementally with capacity filters before full
/// embedding. Deterministic: identical budgets give identical outcomes and
/// certificates across runs and worker counts.
FreeSearchResult find_free_coloring(const ArrowQuery& q);

struct ArrowVerdict {
  bool arrows = false;
  std::optional<EdgeColoring> certificate;  // free coloring when !arrows
  SearchStats stats;
};

/// arrows = true iff exhaustive search finds no free coloring. Budget
/// exhaustion raises IndeterminateError instead of returning a verdict.
ArrowVerdict arrows(const ArrowQuery& q);

struct MinRamseyResult {
  int value = 0;
  std::optional<EdgeColoring> certificate_below;  // free coloring of K_{value-1}
  SearchStats stats;
};

/// Least n <= cap with K_n arrowing the targets; throws CapacityError when
/// every n <= cap fails.
MinRamseyResult min_ramsey(const Forest& f, const std::vector<int>& cliques, int cap,
                           const SearchLimits& limits = {});

struct MinStarResult {
  int value = 0;
  std::optional<EdgeColoring> certificate_below;  // free coloring at degree value-1
  SearchStats stats;
};

/// Least pendant degree k with K_{ramsey_value-1} + K_{1,k} arrowing the
/// targets. `ramsey_value` is R(f, cliques), typically from the formula.
MinStarResult min_star(const Forest& f, const std::vector<int>& cliques, int ramsey_value,
                       const SearchLimits& limits = {});

/// All free colorings of g, in search order; with dedup, one representative
/// per colored-isomorphism class. Host order must stay within the
/// canonicalization cap when dedup is requested.
std::vector<EdgeColoring> enumerate_free_colorings(const Graph& g,
                                                   const std::optional<Forest>& forest,
                                                   const std::vector<int>& cliques, bool dedup,
                                                   const SearchLimits& limits = {});

}  // namespace ramsey
