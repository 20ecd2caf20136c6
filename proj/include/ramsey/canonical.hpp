#pragma once

#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr int kDefaultCanonicalCap = 10;

/// Canonical label: equal strings iff graphs are isomorphic. Color
/// refinement with individualization backtracking; instances above
/// `max_order` raise CapacityError.
std::string canonical_form(const Graph& g, int max_order = kDefaultCanonicalCap);

/// Canonical label of an edge-colored graph under color-preserving
/// isomorphism (vertices permute, color indices stay fixed).
std::string canonical_form(const EdgeColoring& c, int max_order = kDefaultCanonicalCap);

}  // namespace ramsey
