#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ramsey/calc.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/forest.hpp"

namespace ramsey {

enum class WitnessKind {
  critical_family,
  star_lower,
  multicolor_star_lower,
  ramsey_lower_blowup,
  ramsey_full_duplication,
};

const char* to_string(WitnessKind k);
WitnessKind witness_kind_from_string(const std::string& s);

/// The freeness statement a witness certifies.
struct WitnessClaim {
  std::string forest_spec;  // empty when no forest target
  std::vector<int> cliques;

  std::optional<Forest> forest() const;
};

/// An edge coloring tagged with its construction recipe and claim.
struct WitnessColoring {
  EdgeColoring coloring;
  WitnessKind kind = WitnessKind::critical_family;
  nlohmann::json params;  // explicit part/blob memberships and parameters
  WitnessClaim claim;
};

/// The critical colorings of K_{r-1} for (k copies of an n-vertex tree,
/// K_m), r = (n-1)(m-2)+nk: red class a disjoint union of m-1 cliques with
/// orders congruent to n-1 mod n, blue the complementary complete
/// multipartite graph. One witness per isomorphism class.
std::vector<WitnessColoring> critical_family(int n, int m, int k);

/// Every (i, composition)-indexed member, without deduplication.
std::vector<WitnessColoring> critical_family_indexed(int n, int m, int k);

/// True iff c is a 2-coloring of K_{r-1} whose red class is a disjoint union
/// of exactly m-1 cliques of orders (n-1)+n*a with the a-values summing to
/// k-1 (blue is then the complement).
bool family_membership(const EdgeColoring& c, int n, int m, int k);

/// Free coloring of K_{R-1} plus a pendant vertex of degree R_*-1, following
/// the partition construction; cross colors come from expanding a free
/// coloring of the shadow graph (built by duplicating a vertex of the
/// classical witness).
WitnessColoring star_lower_witness(const Forest& f, const std::vector<int>& cliques,
                                   const ClassicalTable& table = ClassicalTable::bundled());

/// Free coloring of K_{R-1} obtained by blowing up a classical witness:
/// r-2 vertices become cliques of order j0-1, one vertex becomes a clique of
/// order p0-1, cross edges inherit the original color.
WitnessColoring ramsey_lower_witness(const Forest& f, const std::vector<int>& cliques,
                                     const ClassicalTable& table = ClassicalTable::bundled());

/// Free coloring of K_r minus one edge, built by duplicating one vertex of
/// the K_{r-1} classical witness onto the two nonadjacent endpoints.
WitnessColoring ramsey_full_witness(const std::vector<int>& cliques,
                                    std::pair<int, int> missing_edge = {0, 1},
                                    const ClassicalTable& table = ClassicalTable::bundled());

struct VerifyResult {
  bool ok = false;
  std::string detail;  // violated clause when !ok

  explicit operator bool() const { return ok; }
};

/// Re-checks the claimed freeness and the structural metadata (part/blob
/// memberships, orders, pendant degree) against the params.
VerifyResult verify_witness(const WitnessColoring& w,
                            const ClassicalTable& table = ClassicalTable::bundled());

nlohmann::json to_json(const WitnessColoring& w);
WitnessColoring witness_from_json(const nlohmann::json& j);
WitnessColoring load_witness(const std::string& path);
void save_witness(const WitnessColoring& w, const std::string& path);

}  // namespace ramsey
