#include "ramsey/witness.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/json_io.hpp"

namespace ramsey {

using nlohmann::json;

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::critical_family: return "critical-family";
    case WitnessKind::star_lower: return "star-lower";
    case WitnessKind::multicolor_star_lower: return "multicolor-star-lower";
    case WitnessKind::ramsey_lower_blowup: return "ramsey-lower-blowup";
    case WitnessKind::ramsey_full_duplication: return "ramsey-full-duplication";
  }
  return "?";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  if (s == "critical-family") return WitnessKind::critical_family;
  if (s == "star-lower") return WitnessKind::star_lower;
  if (s == "multicolor-star-lower") return WitnessKind::multicolor_star_lower;
  if (s == "ramsey-lower-blowup") return WitnessKind::ramsey_lower_blowup;
  if (s == "ramsey-full-duplication") return WitnessKind::ramsey_full_duplication;
  throw ParseError("unknown witness kind \"" + s + "\"", 0);
}

std::optional<Forest> WitnessClaim::forest() const {
  if (forest_spec.empty()) return std::nullopt;
  return parse_forest(forest_spec);
}

namespace {

// witness dedup may exceed the default canonical cap; clique-union red
// classes stay cheap for the refinement search up to this order
constexpr int kWitnessCanonicalCap = 32;

std::string forest_spec_for(int n, int k) {
  Forest f(std::vector<Tree>(static_cast<std::size_t>(k), Tree::path(n)));
  return f.to_string();
}

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  // lexicographic enumeration of nonnegative integer compositions
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == parts - 1) {
      cur[idx] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, total);
  return out;
}

WitnessColoring build_family_member(int n, int m, int k, int i, const std::vector<int>& comp) {
  int r = (n - 1) * (m - 2) + n * k;
  std::vector<int> red_orders;
  for (int kj : comp) red_orders.push_back((n - 1) + n * kj);
  red_orders.push_back((k - i) * n - 1);
  std::sort(red_orders.begin(), red_orders.end(), std::greater<int>());

  // red class: disjoint cliques on contiguous ranges; blue: the rest
  std::vector<int> part_of(static_cast<std::size_t>(r - 1), -1);
  json red_components = json::array();
  int at = 0;
  for (std::size_t p = 0; p < red_orders.size(); ++p) {
    json verts = json::array();
    for (int v = at; v < at + red_orders[p]; ++v) {
      part_of[v] = static_cast<int>(p);
      verts.push_back(v);
    }
    red_components.push_back(verts);
    at += red_orders[p];
  }
  EdgeColoring col = EdgeColoring::from_function(
      build_complete(r - 1), 2, [&](int u, int v) { return part_of[u] == part_of[v] ? 0 : 1; });

  WitnessColoring w;
  w.coloring = std::move(col);
  w.kind = WitnessKind::critical_family;
  w.params = json{{"n", n},
                  {"m", m},
                  {"k", k},
                  {"i", i},
                  {"composition", comp},
                  {"red_components", red_components}};
  w.claim = WitnessClaim{forest_spec_for(n, k), {m}};
  return w;
}

void check_family_params(int n, int m, int k) {
  if (n < 2 || m < 3 || k < 1)
    throw std::invalid_argument("critical family needs n >= 2, m >= 3, k >= 1");
}

}  // namespace

std::vector<WitnessColoring> critical_family_indexed(int n, int m, int k) {
  check_family_params(n, m, k);
  std::vector<WitnessColoring> out;
  for (int i = 0; i < k; ++i)
    for (const auto& comp : compositions(i, m - 2)) out.push_back(build_family_member(n, m, k, i, comp));
  return out;
}

std::vector<WitnessColoring> critical_family(int n, int m, int k) {
  auto indexed = critical_family_indexed(n, m, k);
  std::vector<WitnessColoring> out;
  std::set<std::string> seen;
  for (auto& w : indexed) {
    Graph red = w.coloring.color_class(0);
    std::string key;
    if (red.order() <= kDefaultCanonicalCap) {
      key = canonical_form(red, kDefaultCanonicalCap);
    } else {
      // disjoint clique unions are isomorphic iff the order multisets match
      auto orders = w.params.at("red_components");
      std::vector<int> sizes;
      for (const auto& c : orders) sizes.push_back(static_cast<int>(c.size()));
      std::sort(sizes.begin(), sizes.end());
      key = "sizes:";
      for (int s : sizes) key += std::to_string(s) + ",";
    }
    if (seen.insert(key).second) out.push_back(std::move(w));
  }
  return out;
}

bool family_membership(const EdgeColoring& c, int n, int m, int k) {
  check_family_params(n, m, k);
  int r = (n - 1) * (m - 2) + n * k;
  if (c.graph().order() != r - 1 || !c.graph().is_complete())
    throw std::invalid_argument("family membership is defined on colorings of K_{r-1}");
  if (c.palette() != 2) throw std::invalid_argument("family membership needs a 2-coloring");

  Graph red = c.color_class(0);
  // red must be a disjoint union of exactly m-1 cliques of orders
  // (n-1) + n*a with the a-values summing to k-1
  std::uint64_t seen = 0;
  int components = 0;
  long long a_sum = 0;
  for (int v = 0; v < red.order(); ++v) {
    std::uint64_t bit = std::uint64_t{1} << v;
    if (seen & bit) continue;
    std::uint64_t comp = bit, frontier = bit;
    while (frontier) {
      std::uint64_t next = 0, f = frontier;
      while (f) {
        int w = std::countr_zero(f);
        f &= f - 1;
        next |= red.neighbors(w);
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    seen |= comp;
    ++components;
    int size = std::popcount(comp);
    // clique check: every member adjacent to all others in the component
    std::uint64_t cc = comp;
    while (cc) {
      int w = std::countr_zero(cc);
      cc &= cc - 1;
      if ((red.neighbors(w) & comp) != (comp & ~(std::uint64_t{1} << w))) return false;
    }
    int rem = size - (n - 1);
    if (rem < 0 || rem % n != 0) return false;
    a_sum += rem / n;
  }
  return components == m - 1 && a_sum == k - 1;
}

namespace {

struct StarPlan {
  int R = 0;
  int r_star = 0;
  int j0 = 0;
  long long p0 = 0;
  int base_r = 0;
};

StarPlan star_plan(const Forest& f, const std::vector<int>& cliques, const ClassicalTable& table) {
  RamseyResult big = ramsey_forest(f, cliques, table);
  RamseyResult star = star_forest(f, cliques, table);
  StarPlan p;
  p.R = static_cast<int>(big.value);
  p.r_star = static_cast<int>(star.value);
  p.j0 = big.j0;
  p.base_r = big.base_r;
  ForestStats st = stats(f);
  for (auto [i, ki] : st.k)
    if (i >= p.j0) p.p0 += static_cast<long long>(i) * ki;
  return p;
}

}  // namespace

WitnessColoring star_lower_witness(const Forest& f, const std::vector<int>& cliques,
                                   const ClassicalTable& table) {
  StarPlan p = star_plan(f, cliques, table);
  EdgeColoring base = classical_witness_expanded(cliques, table);  // K_{base_r - 1}

  // core parts: V_1 (size j0-1, not seen by the pendant vertex) placed last,
  // the attached parts V_2..V_{base_r-2} (size j0-1) and V_{base_r-1}
  // (size p0-1) fill the prefix so the pendant is adjacent to exactly them
  int core = p.R - 1;
  int pendant = core;
  std::vector<int> part_of(static_cast<std::size_t>(core), -1);
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(p.base_r - 1));
  int at = 0;
  for (int part = 2; part <= p.base_r - 1; ++part) {
    int size = part == p.base_r - 1 ? static_cast<int>(p.p0) - 1 : p.j0 - 1;
    for (int v = at; v < at + size; ++v) {
      part_of[v] = part;
      parts[static_cast<std::size_t>(part - 1)].push_back(v);
    }
    at += size;
  }
  for (int v = at; v < core; ++v) {
    part_of[v] = 1;
    parts[0].push_back(v);
  }

  // shadow graph on {v, V_1, ..., V_{base_r-1}}: v and V_1 are the two
  // copies of base-witness vertex 0, parts j >= 2 map to vertex j-1
  auto shadow_vertex = [&](int part) { return part <= 1 ? 0 : part - 1; };
  auto cross_color = [&](int part_a, int part_b) {
    return 1 + base.color_of(shadow_vertex(part_a), shadow_vertex(part_b));
  };

  Graph host = build_pendant_star(core, p.r_star - 1);
  EdgeColoring col = EdgeColoring::from_function(host, 1 + static_cast<int>(cliques.size()),
                                                 [&](int u, int v) {
                                                   int pa = u == pendant ? 0 : part_of[u];
                                                   int pb = v == pendant ? 0 : part_of[v];
                                                   if (pa == pb) return 0;
                                                   return cross_color(pa, pb);
                                                 });

  WitnessColoring w;
  w.coloring = std::move(col);
  w.kind = cliques.size() == 1 ? WitnessKind::star_lower : WitnessKind::multicolor_star_lower;
  json jparts = json::array();
  for (const auto& pt : parts) jparts.push_back(pt);
  w.params = json{{"forest", f.to_string()}, {"cliques", cliques},
                  {"R", p.R},               {"r_star", p.r_star},
                  {"j0", p.j0},             {"p0", p.p0},
                  {"base_r", p.base_r},     {"parts", jparts},
                  {"pendant", pendant}};
  w.claim = WitnessClaim{f.to_string(), cliques};
  return w;
}

WitnessColoring ramsey_lower_witness(const Forest& f, const std::vector<int>& cliques,
                                     const ClassicalTable& table) {
  if (f.empty()) throw std::invalid_argument("Ramsey witness needs a nonempty forest");
  RamseyResult big = ramsey_forest(f, cliques, table);
  ForestStats st = stats(f);
  long long p0 = 0;
  for (auto [i, ki] : st.k)
    if (i >= big.j0) p0 += static_cast<long long>(i) * ki;
  EdgeColoring base = classical_witness_expanded(cliques, table);  // K_{base_r - 1}

  // blow up: base vertex 0 becomes a clique of order p0-1, the others become
  // cliques of order j0-1; cross edges inherit the base color
  int R = static_cast<int>(big.value);
  std::vector<int> blob_of(static_cast<std::size_t>(R - 1), -1);
  std::vector<std::vector<int>> blobs(static_cast<std::size_t>(big.base_r - 1));
  int at = 0;
  for (int b = 0; b < big.base_r - 1; ++b) {
    int size = b == 0 ? static_cast<int>(p0) - 1 : big.j0 - 1;
    for (int v = at; v < at + size; ++v) {
      blob_of[v] = b;
      blobs[static_cast<std::size_t>(b)].push_back(v);
    }
    at += size;
  }
  EdgeColoring col = EdgeColoring::from_function(
      build_complete(R - 1), 1 + static_cast<int>(cliques.size()), [&](int u, int v) {
        if (blob_of[u] == blob_of[v]) return 0;
        return 1 + base.color_of(blob_of[u], blob_of[v]);
      });

  WitnessColoring w;
  w.coloring = std::move(col);
  w.kind = WitnessKind::ramsey_lower_blowup;
  json jblobs = json::array();
  for (const auto& b : blobs) jblobs.push_back(b);
  w.params = json{{"forest", f.to_string()}, {"cliques", cliques}, {"R", R},
                  {"j0", big.j0},            {"p0", p0},           {"base_r", big.base_r},
                  {"blobs", jblobs}};
  w.claim = WitnessClaim{f.to_string(), cliques};
  return w;
}

WitnessColoring ramsey_full_witness(const std::vector<int>& cliques,
                                    std::pair<int, int> missing_edge, const ClassicalTable& table) {
  long long r = classical_r(cliques, table);
  auto [eu, ev] = missing_edge;
  if (eu > ev) std::swap(eu, ev);
  if (eu < 0 || ev >= r || eu == ev)
    throw std::invalid_argument("missing edge endpoints must be distinct vertices of K_r");
  EdgeColoring base = classical_witness_expanded(cliques, table);  // K_{r-1}

  // duplicate base vertex 0 onto both endpoints of the removed edge; a
  // clique can use at most one copy, so freeness carries over
  std::vector<int> image(static_cast<std::size_t>(r), -1);
  image[eu] = image[ev] = 0;
  int next = 1;
  for (int v = 0; v < r; ++v)
    if (image[v] < 0) image[v] = next++;

  Graph host = build_complete(static_cast<int>(r));
  host.remove_edge(eu, ev);
  EdgeColoring col = EdgeColoring::from_function(host, static_cast<int>(cliques.size()),
                                                 [&](int u, int v) {
                                                   return base.color_of(image[u], image[v]);
                                                 });
  WitnessColoring w;
  w.coloring = std::move(col);
  w.kind = WitnessKind::ramsey_full_duplication;
  w.params = json{{"cliques", cliques}, {"missing_edge", {eu, ev}}, {"r", r}};
  w.claim = WitnessClaim{"", cliques};
  return w;
}

namespace {

VerifyResult fail(const std::string& why) { return VerifyResult{false, why}; }

VerifyResult check_partition(const EdgeColoring& c, const json& groups, int limit,
                             const char* what) {
  std::vector<char> seen(static_cast<std::size_t>(limit), 0);
  for (const auto& g : groups)
    for (const auto& jv : g) {
      int v = jv.get<int>();
      if (v < 0 || v >= limit) return fail(std::string(what) + " vertex out of range");
      if (seen[v]) return fail(std::string(what) + " lists overlap");
      seen[v] = 1;
    }
  for (char s : seen)
    if (!s) return fail(std::string(what) + " lists do not cover the host");
  // intra-group edges must carry color 0, cross edges must not
  for (const auto& g : groups)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        int u = g[i].get<int>(), v = g[j].get<int>();
        if (!c.graph().has_edge(u, v)) return fail(std::string(what) + " is not a clique");
        if (c.color_of(u, v) != 0) return fail(std::string(what) + " edge not in color 0");
      }
  const auto& es = c.edges();
  const auto& cols = c.colors();
  std::vector<int> group_of(static_cast<std::size_t>(limit), -1);
  int gi = 0;
  for (const auto& g : groups) {
    for (const auto& jv : g) group_of[jv.get<int>()] = gi;
    ++gi;
  }
  for (std::size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    if (u < limit && v < limit && group_of[u] != group_of[v] && cols[i] == 0)
      return fail(std::string(what) + ": cross edge colored 0");
  }
  return VerifyResult{true, ""};
}

}  // namespace

VerifyResult verify_witness(const WitnessColoring& w, const ClassicalTable& table) {
  // the freeness claim itself
  std::optional<Forest> forest;
  try {
    forest = w.claim.forest();
  } catch (const ParseError& e) {
    return fail(std::string("claim forest does not parse: ") + e.what());
  }
  int expected_palette = (forest ? 1 : 0) + static_cast<int>(w.claim.cliques.size());
  if (w.coloring.palette() != expected_palette) return fail("palette does not match the claim");
  if (forest && contains_forest(w.coloring.color_class(0), *forest))
    return fail("class 0 contains the claimed forest " + w.claim.forest_spec);
  int offset = forest ? 1 : 0;
  for (std::size_t i = 0; i < w.claim.cliques.size(); ++i)
    if (contains_clique(w.coloring.color_class(offset + static_cast<int>(i)), w.claim.cliques[i]))
      return fail("class " + std::to_string(offset + i) + " contains K_" +
                  std::to_string(w.claim.cliques[i]));

  // structural metadata
  try {
    switch (w.kind) {
      case WitnessKind::critical_family: {
        int n = w.params.at("n").get<int>();
        int m = w.params.at("m").get<int>();
        int k = w.params.at("k").get<int>();
        int r = (n - 1) * (m - 2) + n * k;
        if (w.coloring.graph().order() != r - 1 || !w.coloring.graph().is_complete())
          return fail("host is not K_{r-1}");
        if (!family_membership(w.coloring, n, m, k)) return fail("coloring is outside the critical family");
        auto part = check_partition(w.coloring, w.params.at("red_components"), r - 1,
                                    "red component");
        if (!part.ok) return part;
        break;
      }
      case WitnessKind::star_lower:
      case WitnessKind::multicolor_star_lower: {
        if (!forest) return fail("star witnesses need a forest claim");
        int R = w.params.at("R").get<int>();
        int r_star = w.params.at("r_star").get<int>();
        int j0 = w.params.at("j0").get<int>();
        long long p0 = w.params.at("p0").get<long long>();
        int base_r = w.params.at("base_r").get<int>();
        if (w.coloring.graph() != build_pendant_star(R - 1, r_star - 1))
          return fail("host is not K_{R-1} with a pendant vertex of degree r_star-1");
        const auto& parts = w.params.at("parts");
        if (static_cast<int>(parts.size()) != base_r - 1) return fail("wrong number of parts");
        std::multiset<long long> sizes, expected;
        for (const auto& p : parts) sizes.insert(static_cast<long long>(p.size()));
        for (int i = 0; i < base_r - 2; ++i) expected.insert(j0 - 1);
        expected.insert(p0 - 1);
        if (sizes != expected) return fail("part sizes disagree with the formulas");
        auto part = check_partition(w.coloring, parts, R - 1, "part");
        if (!part.ok) return part;
        for (int v = 0; v < r_star - 1; ++v)
          if (w.coloring.color_of(v, R - 1) == 0) return fail("pendant edge colored 0");
        // cross-check the formula values when the base value is known
        try {
          RamseyResult big = ramsey_forest(*forest, w.claim.cliques, table);
          RamseyResult star = star_forest(*forest, w.claim.cliques, table);
          if (big.value != R || star.value != r_star || big.j0 != j0)
            return fail("params disagree with the formula values");
        } catch (const UnknownValueError&) {
        }
        break;
      }
      case WitnessKind::ramsey_lower_blowup: {
        if (!forest) return fail("blow-up witnesses need a forest claim");
        int R = w.params.at("R").get<int>();
        int j0 = w.params.at("j0").get<int>();
        long long p0 = w.params.at("p0").get<long long>();
        int base_r = w.params.at("base_r").get<int>();
        if (w.coloring.graph().order() != R - 1 || !w.coloring.graph().is_complete())
          return fail("host is not K_{R-1}");
        const auto& blobs = w.params.at("blobs");
        if (static_cast<int>(blobs.size()) != base_r - 1) return fail("wrong number of blobs");
        std::multiset<long long> sizes, expected;
        for (const auto& b : blobs) sizes.insert(static_cast<long long>(b.size()));
        for (int i = 0; i < base_r - 2; ++i) expected.insert(j0 - 1);
        expected.insert(p0 - 1);
        if (sizes != expected) return fail("blob sizes disagree with the formulas");
        auto part = check_partition(w.coloring, blobs, R - 1, "blob");
        if (!part.ok) return part;
        try {
          RamseyResult big = ramsey_forest(*forest, w.claim.cliques, table);
          if (big.value != R || big.j0 != j0) return fail("params disagree with the formula values");
        } catch (const UnknownValueError&) {
        }
        break;
      }
      case WitnessKind::ramsey_full_duplication: {
        long long r = w.params.at("r").get<long long>();
        auto me = w.params.at("missing_edge");
        int eu = me[0].get<int>(), ev = me[1].get<int>();
        Graph expected = build_complete(static_cast<int>(r));
        expected.remove_edge(eu, ev);
        if (w.coloring.graph() != expected) return fail("host is not K_r minus the recorded edge");
        try {
          if (classical_r(w.claim.cliques, table) != r)
            return fail("recorded r disagrees with the classical value");
        } catch (const UnknownValueError&) {
        }
        break;
      }
    }
  } catch (const json::exception& e) {
    return fail(std::string("params are missing required fields: ") + e.what());
  }
  return VerifyResult{true, ""};
}

json to_json(const WitnessColoring& w) {
  json j = to_json(w.coloring);
  j["kind"] = to_string(w.kind);
  j["params"] = w.params;
  j["claim"] = json{{"forest", w.claim.forest_spec.empty() ? json(nullptr) : json(w.claim.forest_spec)},
                    {"cliques", w.claim.cliques}};
  return j;
}

WitnessColoring witness_from_json(const json& j) {
  WitnessColoring w;
  w.coloring = coloring_from_json(j);
  try {
    w.kind = witness_kind_from_string(j.at("kind").get<std::string>());
    w.params = j.at("params");
    const auto& claim = j.at("claim");
    if (!claim.at("forest").is_null()) w.claim.forest_spec = claim.at("forest").get<std::string>();
    w.claim.cliques = claim.at("cliques").get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed witness file: ") + e.what(), 0);
  }
  return w;
}

WitnessColoring load_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON in ") + path + ": " + e.what(), 0);
  }
  return witness_from_json(j);
}

void save_witness(const WitnessColoring& w, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(w).dump(2) << "\n";
}

}  // namespace ramsey
