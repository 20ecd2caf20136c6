#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/forest.hpp"

namespace ramsey {

enum class Provenance { formula, oracle };

const char* to_string(Provenance p);

struct RamseyResult {
  long long value = 0;
  int j0 = 0;
  int base_r = 0;  // classical Ramsey value of the clique tuple
  Provenance provenance = Provenance::formula;
};

/// Exact classical Ramsey numbers R(K_{m1},...,K_{mt}) plus optional witness
/// colorings (free colorings of K_{r-1}).
///
/// File format, one entry per line:
///     m1 m2 ... = value [witness=FILE] [verified=oracle]
/// with '#' comments. Witness paths are relative to the table file.
/// Tuples are normalized before lookup: sorted, entries equal to 2 removed
/// (a color class avoiding K_2 is empty). Singletons need no entry.
class ClassicalTable {
 public:
  struct Entry {
    long long value = 0;
    std::string witness_file;  // empty when none
    bool oracle_verified = false;
  };

  static const ClassicalTable& bundled();
  static ClassicalTable load_file(const std::string& path);
  static ClassicalTable parse(const std::string& text, const std::string& base_dir);

  /// Exact value for the tuple; throws UnknownValueError (naming the tuple)
  /// when it is not derivable. All entries must be >= 2.
  long long value(const std::vector<int>& cliques) const;

  /// Free coloring of K_{value-1} with palette = size of the normalized
  /// tuple, or nullopt when none is available. Builtin fallbacks cover
  /// singletons and the (3,3) cycle coloring.
  std::optional<EdgeColoring> witness(const std::vector<int>& cliques) const;

  const std::map<std::vector<int>, Entry>& entries() const { return entries_; }

 private:
  std::map<std::vector<int>, Entry> entries_;
  std::string base_dir_;
};

/// Sorted tuple with the 2-entries removed. Rejects entries < 2.
std::vector<int> normalize_cliques(const std::vector<int>& cliques);

/// R(K_{m1},...,K_{mt}) from the table (with normalization rules applied).
long long classical_r(const std::vector<int>& cliques,
                      const ClassicalTable& table = ClassicalTable::bundled());

/// Free coloring of K_{r-1} whose palette matches `cliques` as given:
/// class i omits K_{cliques[i]}; classes of dropped 2-entries are empty.
EdgeColoring classical_witness_expanded(const std::vector<int>& cliques,
                                        const ClassicalTable& table = ClassicalTable::bundled());

/// R(F, K_{m1},...,K_{mt}) = max_{j in C(F)} (j-1)(r-2) + sum_{i>=j} i*k_i
/// with r the classical value of the tuple. An empty tuple reads as the
/// one-color case and yields |V(F)|.
RamseyResult ramsey_forest(const Forest& f, const std::vector<int>& cliques,
                           const ClassicalTable& table = ClassicalTable::bundled());

/// R_*(F, K_{m1},...,K_{mt}) = (j0-1)(r-3) + sum_{i>=j0} i*k_i. Requires a
/// forest without isolated vertices and r >= 3.
RamseyResult star_forest(const Forest& f, const std::vector<int>& cliques,
                         const ClassicalTable& table = ClassicalTable::bundled());

struct SizeRamseyBound {
  long long from_star = 0;  // C(R-1, 2) + R_*
  long long binomial = 0;   // C(R, 2) - (j0 - 2); always equals from_star
};

/// Upper bound for the size Ramsey number of F versus K_m, in both algebraic
/// forms (asserted equal).
SizeRamseyBound size_ramsey_upper(const Forest& f, int m,
                                  const ClassicalTable& table = ClassicalTable::bundled());

/// Multicolor variant of the C(R-1,2)+R_* bound. Exposed separately because
/// tightness is only established against a single complete graph.
long long size_ramsey_upper_multicolor(const Forest& f, const std::vector<int>& cliques,
                                       const ClassicalTable& table = ClassicalTable::bundled());

}  // namespace ramsey
