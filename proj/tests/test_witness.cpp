#include <doctest.h>

#include <filesystem>
#include <set>

#include "brute.hpp"
#include "ramsey/calc.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/witness.hpp"

using namespace ramsey;

namespace {

Graph disjoint_cliques(const std::vector<int>& sizes) {
  int n = 0;
  for (int s : sizes) n += s;
  Graph g(n);
  int at = 0;
  for (int s : sizes) {
    for (int u = at; u < at + s; ++u)
      for (int v = u + 1; v < at + s; ++v) g.add_edge(u, v);
    at += s;
  }
  return g;
}

std::set<std::string> red_labels(const std::vector<WitnessColoring>& list) {
  std::set<std::string> out;
  for (const auto& w : list) out.insert(canonical_form(w.coloring.color_class(0), 32));
  return out;
}

}  // namespace

TEST_CASE("critical_family worked examples") {
  // k=1: the unique coloring with red = (m-1) disjoint copies of K_{n-1}
  auto unique = critical_family(2, 3, 1);
  REQUIRE(unique.size() == 1);
  CHECK(unique[0].coloring.graph().order() == 2);
  CHECK(unique[0].coloring.color_class(0).edge_count() == 0);
  CHECK(unique[0].coloring.color_class(1).edge_count() == 1);

  auto pair = critical_family(2, 3, 2);
  REQUIRE(pair.size() == 1);
  CHECK(canonical_form(pair[0].coloring.color_class(0)) ==
        canonical_form(disjoint_cliques({1, 3})));

  auto triple = critical_family(2, 3, 3);
  REQUIRE(triple.size() == 2);
  std::set<std::string> expect{canonical_form(disjoint_cliques({1, 5})),
                               canonical_form(disjoint_cliques({3, 3}))};
  CHECK(red_labels(triple) == expect);

  CHECK_THROWS_AS(critical_family(1, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(critical_family(2, 2, 1), std::invalid_argument);
}

TEST_CASE("class count equals partitions of k-1 into at most m-1 parts") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 3; m <= 5; ++m)
      for (int k = 1; k <= 3; ++k) {
        auto classes = critical_family(n, m, k);
        CHECK(static_cast<long long>(classes.size()) == brute::partition_count(k - 1, m - 1));
        // indexed enumeration never misses a class
        auto indexed = critical_family_indexed(n, m, k);
        CHECK(indexed.size() >= classes.size());
      }
}

TEST_CASE("unique coloring at k=1 across the grid") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 3; m <= 5; ++m) {
      auto list = critical_family(n, m, 1);
      REQUIRE(list.size() == 1);
      std::vector<int> sizes(static_cast<std::size_t>(m - 1), n - 1);
      CHECK(canonical_form(list[0].coloring.color_class(0), 32) ==
            canonical_form(disjoint_cliques(sizes), 32));
    }
}

TEST_CASE("family_membership") {
  // red = K_5 + K_2 on K_7 belongs to the (3,3,2) family
  EdgeColoring in = critical_family_indexed(3, 3, 2)[1].coloring;
  CHECK(family_membership(in, 3, 3, 2));
  for (const auto& w : critical_family_indexed(3, 3, 2))
    CHECK(family_membership(w.coloring, 3, 3, 2));

  // red = star K_{1,3} on K_4: not a clique union
  Graph k4 = build_complete(4);
  EdgeColoring star = EdgeColoring::from_function(
      k4, 2, [](int u, int) { return u == 0 ? 0 : 1; });
  CHECK_FALSE(family_membership(star, 2, 3, 2));

  // red = 2K_2 on K_4: clique orders have the wrong residues
  EdgeColoring two_edges = EdgeColoring::from_function(k4, 2, [](int u, int v) {
    return ((u == 0 && v == 1) || (u == 2 && v == 3)) ? 0 : 1;
  });
  CHECK_FALSE(family_membership(two_edges, 2, 3, 2));

  // wrong host order
  CHECK_THROWS_AS(family_membership(star, 2, 3, 3), std::invalid_argument);
}

TEST_CASE("membership matches the constructed family exactly") {
  for (auto [n, m, k] : std::vector<std::tuple<int, int, int>>{{2, 3, 2}, {2, 3, 3}, {3, 3, 2}, {2, 4, 2}}) {
    for (const auto& w : critical_family_indexed(n, m, k))
      CHECK(family_membership(w.coloring, n, m, k));
    // mutating one edge color breaks membership
    auto base = critical_family(n, m, k)[0].coloring;
    auto colors = base.colors();
    colors[0] = colors[0] == 0 ? 1 : 0;
    EdgeColoring mutated(base.graph(), 2, colors);
    CHECK_FALSE(family_membership(mutated, n, m, k));
  }
}

TEST_CASE("star_lower_witness single clique") {
  WitnessColoring w = star_lower_witness(parse_forest("2*K2"), {3});
  CHECK(w.kind == WitnessKind::star_lower);
  CHECK(w.coloring.graph() == build_pendant_star(4, 3));
  CHECK(verify_witness(w).ok);

  WitnessColoring p = star_lower_witness(parse_forest("P3+K2"), {3});
  CHECK(p.coloring.graph() == build_pendant_star(5, 4));
  CHECK(verify_witness(p).ok);
}

TEST_CASE("star_lower_witness multicolor") {
  WitnessColoring w = star_lower_witness(parse_forest("2*K2"), {3, 3});
  CHECK(w.kind == WitnessKind::multicolor_star_lower);
  CHECK(w.coloring.palette() == 3);
  CHECK(w.coloring.graph() == build_pendant_star(7, 6));
  CHECK(verify_witness(w).ok);
  CHECK_THROWS_AS(star_lower_witness(parse_forest("2*K2"), {3, 4}), UnknownValueError);
}

TEST_CASE("star witness shape follows the formulas across the grid") {
  auto forests = brute::all_forests(6, 2);
  for (const auto& f : forests)
    for (int m : {3, 4, 5}) {
      WitnessColoring w = star_lower_witness(f, {m});
      RamseyResult big = ramsey_forest(f, {m});
      RamseyResult star = star_forest(f, {m});
      CHECK(w.coloring.graph().order() == big.value);
      CHECK(w.coloring.graph().degree(static_cast<int>(big.value) - 1) == star.value - 1);
      CHECK(verify_witness(w).ok);
    }
}

TEST_CASE("ramsey_lower_witness") {
  // single clique: coincides with the critical coloring
  WitnessColoring w = ramsey_lower_witness(parse_forest("2*K2"), {3});
  CHECK(w.coloring.graph().order() == 4);
  CHECK(canonical_form(w.coloring.color_class(0)) == canonical_form(disjoint_cliques({1, 3})));
  CHECK(verify_witness(w).ok);

  // two colors: blow up the cycle witness
  WitnessColoring m = ramsey_lower_witness(parse_forest("2*K2"), {3, 3});
  CHECK(m.coloring.graph().order() == 7);
  CHECK(m.coloring.palette() == 3);
  CHECK(verify_witness(m).ok);

  // single trees: red class is (m-1) copies of K_{n-1}
  for (int n = 2; n <= 5; ++n)
    for (int m2 = 3; m2 <= 5; ++m2) {
      WitnessColoring t = ramsey_lower_witness(Forest({Tree::path(n)}), {m2});
      std::vector<int> sizes(static_cast<std::size_t>(m2 - 1), n - 1);
      CHECK(canonical_form(t.coloring.color_class(0), 32) ==
            canonical_form(disjoint_cliques(sizes), 32));
      CHECK(verify_witness(t).ok);
    }
}

TEST_CASE("blow-up witness with isolated forest vertices") {
  // j0 = 1 collapses every side blob to nothing
  Forest f = parse_forest("K1+K2");
  WitnessColoring w = ramsey_lower_witness(f, {3});
  RamseyResult big = ramsey_forest(f, {3});
  CHECK(big.j0 == 1);
  CHECK(w.coloring.graph().order() == big.value - 1);
  CHECK(verify_witness(w).ok);
}

TEST_CASE("blow-up witness verifies across the grid") {
  auto forests = brute::all_forests(6, 2);
  for (const auto& f : forests)
    for (int m : {3, 4, 5}) {
      WitnessColoring w = ramsey_lower_witness(f, {m});
      CHECK(w.coloring.graph().order() == ramsey_forest(f, {m}).value - 1);
      CHECK(verify_witness(w).ok);
    }
}

TEST_CASE("ramsey_full_witness") {
  WitnessColoring w = ramsey_full_witness({3, 3});
  CHECK(w.coloring.graph().order() == 6);
  CHECK(w.coloring.graph().edge_count() == 14);
  CHECK(verify_witness(w).ok);

  WitnessColoring single = ramsey_full_witness({3});
  CHECK(single.coloring.graph().order() == 3);
  CHECK(single.coloring.graph().edge_count() == 2);  // the path P_3
  CHECK(verify_witness(single).ok);

  WitnessColoring reduced = ramsey_full_witness({2, 5});
  CHECK(reduced.coloring.graph().order() == 5);
  CHECK(reduced.coloring.color_class(0).edge_count() == 0);
  CHECK(verify_witness(reduced).ok);

  WitnessColoring other_edge = ramsey_full_witness({3, 3}, {2, 5});
  CHECK_FALSE(other_edge.coloring.graph().has_edge(2, 5));
  CHECK(verify_witness(other_edge).ok);
}

TEST_CASE("verify_witness flags corruption") {
  WitnessColoring w = star_lower_witness(parse_forest("2*K2"), {3});
  // recolor one intra-part edge
  auto colors = w.coloring.colors();
  const auto& edges = w.coloring.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (w.coloring.colors()[i] == 0) {
      colors[i] = 1;
      break;
    }
  WitnessColoring bad = w;
  bad.coloring = EdgeColoring(w.coloring.graph(), w.coloring.palette(), colors);
  VerifyResult vr = verify_witness(bad);
  CHECK_FALSE(vr.ok);
  CHECK_FALSE(vr.detail.empty());

  // enlarging the claimed forest must also fail
  WitnessColoring overclaim = w;
  overclaim.claim.forest_spec = "3*K2";
  overclaim.params["forest"] = "3*K2";
  CHECK_FALSE(verify_witness(overclaim).ok);
}

TEST_CASE("witness files round trip") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ramsey_test_witness";
  fs::create_directories(dir);
  WitnessColoring w = star_lower_witness(parse_forest("2*K2"), {3, 3});
  auto path = (dir / "w.json").string();
  save_witness(w, path);
  WitnessColoring back = load_witness(path);
  CHECK(back.coloring == w.coloring);
  CHECK(back.kind == w.kind);
  CHECK(back.claim.cliques == w.claim.cliques);
  CHECK(back.claim.forest_spec == w.claim.forest_spec);
  CHECK(verify_witness(back).ok);
  CHECK_THROWS_AS(load_witness((dir / "missing.json").string()), ParseError);
}
