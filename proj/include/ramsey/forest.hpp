#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Connected acyclic graph on vertices 0..order-1.
struct Tree {
  int order = 1;
  std::vector<std::pair<int, int>> edges;

  static Tree path(int n);
  static Tree star(int n);
  static Tree from_edges(int order, std::vector<std::pair<int, int>> edges);

  Graph to_graph() const;
  int degree(int v) const;
};

/// Standard Prüfer decoding; a sequence of length L yields a tree on L+2
/// vertices. Entries must lie in 0..L+1.
Tree prufer_decode(const std::vector<int>& seq);

/// Complete isomorphism invariant for trees (rooted encoding at the
/// centroid-free center, bicentral trees encoded at the center edge).
std::string tree_label(const Tree& t);

/// A multiset of trees. Components are kept sorted by (order, label) so all
/// derived output is deterministic.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> components);

  const std::vector<Tree>& components() const { return components_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool empty() const { return components_.empty(); }
  int total_order() const;
  bool has_isolated_vertices() const;

  /// Disjoint union as a Graph (vertices relabeled contiguously).
  Graph to_graph() const;

  /// Canonical spelling in the forest grammar; parsing it back gives an
  /// equal forest, and the spelling is a fixed point of parse+serialize.
  std::string to_string() const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<Tree> components_;
  std::vector<std::string> labels_;  // parallel to components_
};

/// Grammar:  forest := term ("+" term)*
///           term   := [INT "*"] tree
///           tree   := "P"INT | "S"INT | "K1" | "K2"
///                   | "T(" INT ("," INT)* ")"          -- Prüfer code
///                   | "E(" pair ("," pair)* ")"        -- explicit edges
/// Whitespace is ignored; orders are vertex counts.
Forest parse_forest(std::string_view spec);

/// Component spectrum: n = largest component order, k[i] = number of
/// components with exactly i vertices, C = support of k, q = |C|.
struct ForestStats {
  int n = 0;
  std::map<int, int> k;
  std::set<int> C;
  int q = 0;
  int total = 0;
};

ForestStats stats(const Forest& f);

struct JRealization {
  int j0 = 0;
  long long value = 0;
};

/// value = max over j in C(F) of (j-1)(r-2) + sum_{i=j..n} i*k_i,
/// j0 = the smallest maximizing j. Requires a nonempty forest and r >= 2.
JRealization j0_and_max(const Forest& f, int base_r);
JRealization j0_and_max(const ForestStats& st, int base_r);

}  // namespace ramsey
