#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brute.hpp"
#include "ramsey/calc.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;

namespace {

ArrowQuery query(Graph g, const char* forest, std::vector<int> cliques, SearchLimits lim = {}) {
  ArrowQuery q;
  q.graph = std::move(g);
  if (forest) q.forest = parse_forest(forest);
  q.cliques = std::move(cliques);
  q.limits = lim;
  return q;
}

}  // namespace

TEST_CASE("find_free_coloring worked examples") {
  auto found = find_free_coloring(query(build_complete(4), "2*K2", {3}));
  REQUIRE(found.outcome == SearchOutcome::found_free);
  CHECK(is_free_coloring(*found.coloring, parse_forest("2*K2"), {3}));
  // the red class of the K_4 certificate is K_1 + K_3
  Graph red = found.coloring->color_class(0);
  CHECK(red.edge_count() == 3);
  CHECK(contains_clique(red, 3));

  auto exhausted = find_free_coloring(query(build_complete(5), "2*K2", {3}));
  CHECK(exhausted.outcome == SearchOutcome::exhausted);
  CHECK_FALSE(exhausted.coloring.has_value());

  auto pair = find_free_coloring(query(build_complete(5), nullptr, {3, 3}));
  REQUIRE(pair.outcome == SearchOutcome::found_free);
  std::optional<Forest> none;
  CHECK(is_free_coloring(*pair.coloring, none, {3, 3}));
  // both classes of the K_5 certificate are 5-cycles
  for (int c : {0, 1}) {
    Graph cls = pair.coloring->color_class(c);
    CHECK(cls.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(cls.degree(v) == 2);
  }
}

TEST_CASE("arrows worked examples") {
  CHECK(arrows(query(build_complete(6), nullptr, {3, 3})).arrows);
  Graph k6e = build_complete(6);
  k6e.remove_edge(0, 1);
  auto verdict = arrows(query(k6e, nullptr, {3, 3}));
  CHECK_FALSE(verdict.arrows);
  REQUIRE(verdict.certificate.has_value());
  std::optional<Forest> none;
  CHECK(is_free_coloring(*verdict.certificate, none, {3, 3}));

  // K_4 with a pendant vertex of full degree is K_5
  CHECK(arrows(query(build_pendant_star(4, 4), "2*K2", {3})).arrows);
}

TEST_CASE("degenerate targets") {
  // a K_1 target sits in every spanning class
  CHECK(arrows(query(build_complete(3), nullptr, {1, 3})).arrows);
  // an all-isolated-vertices forest sits in every class 0
  CHECK(arrows(query(build_complete(3), "2*K1", {3})).arrows);
  // a K_2 target forces the other color everywhere
  auto v = arrows(query(build_complete(4), nullptr, {2, 5}));
  CHECK_FALSE(v.arrows);
  CHECK(v.certificate->color_class(0).edge_count() == 0);
  CHECK_THROWS_AS(arrows(query(build_complete(3), nullptr, {})), std::invalid_argument);
}

TEST_CASE("min_ramsey matches the formula on the named cases") {
  CHECK(min_ramsey(parse_forest("2*K2"), {3}, 10).value == 5);
  CHECK(min_ramsey(parse_forest("P4"), {3}, 10).value == 7);
  CHECK(min_ramsey(parse_forest("3*K2"), {3}, 10).value == 7);
  auto r = min_ramsey(parse_forest("P3+K2"), {3}, 10);
  CHECK(r.value == 6);
  REQUIRE(r.certificate_below.has_value());
  CHECK(is_free_coloring(*r.certificate_below, parse_forest("P3+K2"), {3}));
  CHECK_THROWS_AS(min_ramsey(parse_forest("P4"), {3}, 4), CapacityError);
}

TEST_CASE("min_star matches the formula on the named cases") {
  CHECK(min_star(parse_forest("2*K2"), {3}, 5).value == 4);
  CHECK(min_star(parse_forest("P4"), {3}, 7).value == 4);
  auto s = min_star(parse_forest("P3+K2"), {3}, 6);
  CHECK(s.value == 5);
  REQUIRE(s.certificate_below.has_value());
  CHECK(is_free_coloring(*s.certificate_below, parse_forest("P3+K2"), {3}));
}

TEST_CASE("enumerate_free_colorings") {
  auto one = enumerate_free_colorings(build_complete(4), parse_forest("2*K2"), {3}, true);
  CHECK(one.size() == 1);

  auto two = enumerate_free_colorings(build_complete(6), parse_forest("3*K2"), {3}, true);
  CHECK(two.size() == 2);
  std::set<std::string> reds;
  for (const auto& c : two) reds.insert(canonical_form(c.color_class(0)));
  CHECK(reds.size() == 2);

  auto none = enumerate_free_colorings(build_complete(5), parse_forest("2*K2"), {3}, true);
  CHECK(none.empty());

  // raw count: the labeled K_1+K_3 placements on K_4
  auto raw = enumerate_free_colorings(build_complete(4), parse_forest("2*K2"), {3}, false);
  CHECK(raw.size() == 4);

  // dedup keys agree between the red-class shortcut and the full colored label
  std::set<std::string> full_keys;
  for (const auto& c : raw) full_keys.insert(canonical_form(c));
  CHECK(full_keys.size() == 1);
}

TEST_CASE("budget exhaustion is a distinct outcome") {
  SearchLimits tiny;
  tiny.node_budget = 200;
  auto res = find_free_coloring(query(build_complete(6), nullptr, {3, 3}, tiny));
  CHECK(res.outcome == SearchOutcome::budget_exceeded);
  CHECK_THROWS_AS(arrows(query(build_complete(6), nullptr, {3, 3}, tiny)), IndeterminateError);
  // an unambiguous find can still happen under a small budget
  SearchLimits small;
  small.node_budget = 100000;
  auto found = find_free_coloring(query(build_complete(5), nullptr, {3, 3}, small));
  CHECK(found.outcome == SearchOutcome::found_free);
}

TEST_CASE("verdicts and certificates are deterministic across runs and workers") {
  for (int workers : {1, 2, 4}) {
    SearchLimits lim;
    lim.workers = workers;
    auto a = find_free_coloring(query(build_complete(4), "2*K2", {3}, lim));
    auto b = find_free_coloring(query(build_complete(4), "2*K2", {3}, lim));
    REQUIRE(a.outcome == SearchOutcome::found_free);
    CHECK(*a.coloring == *b.coloring);
  }
  SearchLimits solo, quad;
  quad.workers = 4;
  auto ref = find_free_coloring(query(build_complete(7), "3*K2", {3}, solo));
  auto par = find_free_coloring(query(build_complete(7), "3*K2", {3}, quad));
  CHECK(ref.outcome == par.outcome);
  if (ref.coloring) CHECK(*ref.coloring == *par.coloring);

  auto seq_en = enumerate_free_colorings(build_complete(6), parse_forest("3*K2"), {3}, false, solo);
  auto par_en = enumerate_free_colorings(build_complete(6), parse_forest("3*K2"), {3}, false, quad);
  CHECK(seq_en == par_en);

  // deterministic budget accounting across worker counts
  SearchLimits budget1, budget4;
  budget1.node_budget = budget4.node_budget = 3000;
  budget4.workers = 4;
  auto o1 = find_free_coloring(query(build_complete(6), nullptr, {3, 3}, budget1));
  auto o4 = find_free_coloring(query(build_complete(6), nullptr, {3, 3}, budget4));
  CHECK(o1.outcome == o4.outcome);
}

TEST_CASE("verdicts do not depend on vertex labeling") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    Graph host = build_pendant_star(5, 2 + trial % 3);
    std::vector<int> perm(static_cast<std::size_t>(host.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph relabeled(host.order());
    for (auto [u, v] : host.edges()) relabeled.add_edge(perm[u], perm[v]);
    auto a = arrows(query(host, "2*K2", {3}));
    auto b = arrows(query(relabeled, "2*K2", {3}));
    CHECK(a.arrows == b.arrows);
  }
}

TEST_CASE("arrowing is monotone under edge addition") {
  for (int k = 0; k <= 4; ++k) {
    Graph host = build_pendant_star(4, k);
    bool base = arrows(query(host, "P3", {3})).arrows;
    for (int v = k; v < 4; ++v) {
      Graph bigger = host;
      bigger.add_edge(4, v);
      bool after = arrows(query(bigger, "P3", {3})).arrows;
      if (base) CHECK(after);
    }
  }
}

TEST_CASE("symmetry reduction does not change verdicts") {
  SearchLimits on, off;
  on.symmetry = SymmetryMode::on;
  off.symmetry = SymmetryMode::off;
  for (int n = 4; n <= 7; ++n) {
    bool a = arrows(query(build_complete(n), "2*K2", {3}, on)).arrows;
    bool b = arrows(query(build_complete(n), "2*K2", {3}, off)).arrows;
    CHECK(a == b);
  }
  CHECK(arrows(query(build_pendant_star(6, 4), "P4", {3}, on)).arrows ==
        arrows(query(build_pendant_star(6, 4), "P4", {3}, off)).arrows);
}

TEST_CASE("oracle certificates always verify") {
  auto forests = brute::all_forests(5, 2);
  for (const auto& f : forests) {
    auto res = find_free_coloring(query(build_complete(4), f.to_string().c_str(), {3}));
    if (res.outcome == SearchOutcome::found_free)
      CHECK(is_free_coloring(*res.coloring, f, {3}));
  }
}

TEST_CASE("verdicts agree with direct enumeration of all colorings") {
  // independent ground truth: try every coloring via is_free_coloring
  auto brute_has_free = [](const Graph& g, const std::optional<Forest>& f,
                           const std::vector<int>& ms) {
    auto es = g.edges();
    int palette = (f ? 1 : 0) + static_cast<int>(ms.size());
    std::vector<std::uint8_t> colors(es.size(), 0);
    while (true) {
      if (is_free_coloring(EdgeColoring(g, palette, colors), f, ms)) return true;
      std::size_t pos = 0;
      while (pos < colors.size() && colors[pos] == palette - 1) colors[pos++] = 0;
      if (pos == colors.size()) return false;
      ++colors[pos];
    }
  };
  std::vector<Graph> hosts{build_complete(4), build_complete(5), build_pendant_star(4, 2),
                           build_pendant_star(3, 3)};
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  hosts.push_back(c5);
  for (const auto& host : hosts) {
    for (const char* spec : {"2*K2", "P3", "P4", "K2+K1"}) {
      auto mine = arrows(query(host, spec, {3}));
      CHECK(mine.arrows == !brute_has_free(host, parse_forest(spec), {3}));
    }
    auto pure = arrows(query(host, nullptr, {3, 3}));
    std::optional<Forest> none;
    CHECK(pure.arrows == !brute_has_free(host, none, {3, 3}));
  }
}

TEST_CASE("enumeration counts agree with direct filtering") {
  // count free colorings of K_4 for (2K_2, K_3) by trying all 2^6
  Graph k4 = build_complete(4);
  auto es = k4.edges();
  int direct = 0;
  for (std::uint32_t mask = 0; mask < (1u << 6); ++mask) {
    std::vector<std::uint8_t> colors(6);
    for (int i = 0; i < 6; ++i) colors[i] = (mask >> i) & 1u;
    if (is_free_coloring(EdgeColoring(k4, 2, colors), parse_forest("2*K2"), {3})) ++direct;
  }
  auto raw = enumerate_free_colorings(k4, parse_forest("2*K2"), {3}, false);
  CHECK(static_cast<int>(raw.size()) == direct);
}

TEST_CASE("order-9 refutation agrees with symmetry off") {
  SearchLimits off;
  off.symmetry = SymmetryMode::off;
  CHECK(min_ramsey(parse_forest("P5"), {3}, 10, off).value == 9);
  CHECK(min_ramsey(parse_forest("P5"), {3}, 10).value == 9);
}

TEST_CASE("large certificates still verify") {
  auto r = min_ramsey(parse_forest("P6"), {3}, 12);
  CHECK(r.value == 11);
  REQUIRE(r.certificate_below.has_value());
  CHECK(is_free_coloring(*r.certificate_below, parse_forest("P6"), {3}));
}
