#include "ramsey/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <set>
#include <thread>

#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"
#include "search_core.hpp"

namespace ramsey {

namespace {

using detail::CompiledForest;
using detail::Rows;
using Clock = std::chrono::steady_clock;

constexpr int kMaxPalette = 8;
constexpr int kSliceTarget = 512;  // fixed so outcomes cannot depend on the worker count

struct Ctx {
  Graph host;
  std::vector<std::pair<int, int>> edges;
  int palette = 0;
  bool has_forest = false;
  CompiledForest forest;
  bool forest_possible = false;      // forest fits the host at all
  std::vector<int> clique_of_color;  // 0 for the forest color
  std::vector<int> constraint;       // per edge: earlier star edge bounding its color
  bool unsat = false;                // some target sits in the empty spanning class
  int split_depth = 0;
  long long node_budget = 0;  // per slice
  double time_budget = 0.0;
  int workers = 1;
};

// vertices u, v are interchangeable when swapping them is an automorphism;
// this relation is transitive, and any permutation of a class extends to an
// automorphism, so colors along a star inside a class may be forced into
// nondecreasing order
std::vector<std::vector<int>> symmetric_classes(const Graph& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int u = 0; u < n; ++u) {
    if (cls[u] >= 0) continue;
    cls[u] = next;
    for (int v = u + 1; v < n; ++v) {
      if (cls[v] >= 0) continue;
      std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
      if ((g.neighbors(u) & mask) == (g.neighbors(v) & mask)) cls[v] = next;
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (int v = 0; v < n; ++v) out[cls[v]].push_back(v);
  return out;
}

Ctx build_ctx(const ArrowQuery& q, bool for_enumeration) {
  Ctx ctx;
  ctx.host = q.graph;
  ctx.edges = q.graph.edges();
  ctx.has_forest = q.forest.has_value();
  ctx.palette = (ctx.has_forest ? 1 : 0) + static_cast<int>(q.cliques.size());
  if (ctx.palette < 1) throw std::invalid_argument("arrowing needs at least one target");
  if (ctx.palette > kMaxPalette) throw std::invalid_argument("at most 8 colors are supported");
  if (ctx.has_forest && q.forest->empty())
    throw std::invalid_argument("the forest target must be nonempty");
  for (int m : q.cliques)
    if (m < 1) throw std::invalid_argument("clique targets must have positive order");

  ctx.clique_of_color.assign(static_cast<std::size_t>(ctx.palette), 0);
  for (std::size_t i = 0; i < q.cliques.size(); ++i)
    ctx.clique_of_color[(ctx.has_forest ? 1 : 0) + i] = q.cliques[i];

  Rows empty(static_cast<std::size_t>(q.graph.order()), 0);
  if (ctx.has_forest) {
    ctx.forest = detail::compile_forest(*q.forest);
    ctx.forest_possible = detail::forest_fits(q.graph.rows(), q.graph.order(), ctx.forest);
    if (detail::forest_fits(empty, q.graph.order(), ctx.forest)) ctx.unsat = true;
  }
  for (int m : q.cliques)
    if (m <= 1 && q.graph.order() >= m) ctx.unsat = true;

  // symmetry: star colors inside each interchangeable-vertex class are
  // forced nondecreasing; off for enumeration, which must see everything
  bool symmetry = q.limits.symmetry == SymmetryMode::on ||
                  (q.limits.symmetry == SymmetryMode::automatic && q.graph.order() >= 8);
  if (for_enumeration) symmetry = false;
  ctx.constraint.assign(ctx.edges.size(), -1);
  if (symmetry) {
    std::vector<std::vector<int>> edge_index(static_cast<std::size_t>(q.graph.order()),
                                             std::vector<int>(q.graph.order(), -1));
    for (std::size_t i = 0; i < ctx.edges.size(); ++i) {
      auto [u, v] = ctx.edges[i];
      edge_index[u][v] = edge_index[v][u] = static_cast<int>(i);
    }
    for (const auto& cls : symmetric_classes(q.graph)) {
      if (cls.size() < 2) continue;
      int root = cls[0];
      int prev = -1;
      for (std::size_t i = 1; i < cls.size(); ++i) {
        int e = edge_index[root][cls[i]];
        if (e < 0) continue;  // class members are uniformly adjacent or not
        if (prev >= 0) ctx.constraint[e] = prev;
        prev = e;
      }
    }
  }

  // fixed split depth: palette^depth reaches the slice target
  long long combos = 1;
  int depth = 0;
  while (depth < static_cast<int>(ctx.edges.size()) && combos < kSliceTarget) {
    combos *= ctx.palette;
    ++depth;
  }
  ctx.split_depth = depth;
  ctx.workers = std::max(1, q.limits.workers);
  ctx.node_budget = q.limits.node_budget;
  ctx.time_budget = q.limits.time_budget_seconds;
  return ctx;
}

struct Engine {
  const Ctx& ctx;
  std::vector<Rows> rows;  // one adjacency row set per color
  std::vector<std::int8_t> assign;
  long long nodes = 0;
  long long prunes = 0;
  long long node_cap = 0;  // 0 = unlimited
  Clock::time_point deadline{};
  bool use_deadline = false;
  bool exceeded = false;

  explicit Engine(const Ctx& c) : ctx(c) {
    rows.assign(static_cast<std::size_t>(ctx.palette),
                Rows(static_cast<std::size_t>(ctx.host.order()), 0));
    assign.assign(ctx.edges.size(), -1);
  }

  void apply(int pos, int c) {
    auto [u, v] = ctx.edges[pos];
    rows[c][u] |= std::uint64_t{1} << v;
    rows[c][v] |= std::uint64_t{1} << u;
    assign[pos] = static_cast<std::int8_t>(c);
  }

  void undo(int pos, int c) {
    auto [u, v] = ctx.edges[pos];
    rows[c][u] &= ~(std::uint64_t{1} << v);
    rows[c][v] &= ~(std::uint64_t{1} << u);
    assign[pos] = -1;
  }

  // target created by coloring edge `pos` with c?
  bool violates(int pos, int c) const {
    auto [u, v] = ctx.edges[pos];
    if (ctx.has_forest && c == 0)
      return ctx.forest_possible &&
             detail::forest_fits_through_edge(rows[0], ctx.host.order(), ctx.forest, u, v);
    return detail::clique_through_edge(rows[c], u, v, ctx.clique_of_color[c]);
  }

  bool out_of_budget() {
    if (node_cap > 0 && nodes > node_cap) return true;
    if (use_deadline && (nodes & 0xFFF) == 0 && Clock::now() > deadline) return true;
    return false;
  }

  // returns true to stop the whole slice (found / aborted / budget)
  template <typename LeafFn>
  bool dfs(int pos, LeafFn&& leaf) {
    if (pos == static_cast<int>(ctx.edges.size())) return leaf(assign);
    for (int c = 0; c < ctx.palette; ++c) {
      if (ctx.constraint[pos] >= 0 && c < assign[ctx.constraint[pos]]) continue;
      ++nodes;
      if (out_of_budget()) {
        exceeded = true;
        return true;
      }
      apply(pos, c);
      if (violates(pos, c)) {
        ++prunes;
        undo(pos, c);
        continue;
      }
      if (dfs(pos + 1, leaf)) return true;
      undo(pos, c);
    }
    return false;
  }

  void replay(const std::vector<std::int8_t>& prefix, int upto) {
    for (int i = 0; i < upto; ++i) apply(i, prefix[i]);
  }
};

struct SliceOutcome {
  bool processed = false;
  bool found = false;
  bool exceeded = false;
  std::vector<std::int8_t> leaf;
  std::vector<std::vector<std::int8_t>> all;  // enumeration mode
  long long nodes = 0;
  long long prunes = 0;
};

struct RunResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  std::vector<std::int8_t> leaf;
  std::vector<std::vector<std::int8_t>> all;
  SearchStats stats;
};

// shared driver: deterministic slice decomposition, optional thread pool
RunResult run_search(const Ctx& ctx, bool enumerate) {
  auto start = Clock::now();
  RunResult out;

  if (ctx.unsat) {
    out.outcome = SearchOutcome::exhausted;
    out.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  }

  // enumerate prefixes of the first split_depth edges with the same pruned
  // search; every full solution extends exactly one surviving prefix
  std::vector<std::vector<std::int8_t>> prefixes;
  {
    struct Bounded {
      Engine& e;
      int depth;
      std::vector<std::vector<std::int8_t>>& sink;
      void rec(int pos) {
        if (pos == depth) {
          sink.push_back(e.assign);
          return;
        }
        for (int c = 0; c < e.ctx.palette; ++c) {
          if (e.ctx.constraint[pos] >= 0 && c < e.assign[e.ctx.constraint[pos]]) continue;
          ++e.nodes;
          e.apply(pos, c);
          if (e.violates(pos, c)) {
            ++e.prunes;
            e.undo(pos, c);
            continue;
          }
          rec(pos + 1);
          e.undo(pos, c);
        }
      }
    };
    Engine e(ctx);
    Bounded bounded{e, ctx.split_depth, prefixes};
    bounded.rec(0);
    out.stats.nodes += e.nodes;
    out.stats.prunes += e.prunes;
  }

  long long nslices = std::max<std::size_t>(prefixes.size(), 1);
  long long slice_budget = ctx.node_budget > 0 ? ctx.node_budget / nslices + 1 : 0;
  auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(ctx.time_budget));

  std::vector<SliceOutcome> slices(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<long long> best_found{std::numeric_limits<long long>::max()};

  auto worker = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= prefixes.size()) return;
      if (!enumerate && static_cast<long long>(idx) > best_found.load(std::memory_order_relaxed))
        continue;  // a smaller slice already holds the canonical certificate
      Engine e(ctx);
      e.node_cap = slice_budget;
      if (ctx.time_budget > 0) {
        e.use_deadline = true;
        e.deadline = deadline;
      }
      e.replay(prefixes[idx], ctx.split_depth);
      SliceOutcome& slot = slices[idx];
      slot.processed = true;
      if (enumerate) {
        e.dfs(ctx.split_depth, [&](const std::vector<std::int8_t>& leaf) {
          slot.all.push_back(leaf);
          return false;
        });
      } else {
        e.dfs(ctx.split_depth, [&](const std::vector<std::int8_t>& leaf) {
          slot.found = true;
          slot.leaf = leaf;
          return true;
        });
        if (slot.found) {
          long long mine = static_cast<long long>(idx);
          long long cur = best_found.load();
          while (mine < cur && !best_found.compare_exchange_weak(cur, mine)) {
          }
        }
      }
      slot.exceeded = e.exceeded;
      slot.nodes = e.nodes;
      slot.prunes = e.prunes;
    }
  };

  if (ctx.workers <= 1 || prefixes.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(ctx.workers, static_cast<int>(prefixes.size()));
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  bool any_exceeded = false;
  bool found = false;
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const SliceOutcome& s = slices[i];
    out.stats.nodes += s.nodes;
    out.stats.prunes += s.prunes;
    if (s.processed) ++out.stats.slices;
    any_exceeded |= s.exceeded;
    if (enumerate)
      for (const auto& leaf : s.all) out.all.push_back(leaf);
    if (!enumerate && !found && s.found) {
      found = true;
      out.leaf = s.leaf;
    }
  }
  if (found)
    out.outcome = SearchOutcome::found_free;
  else if (any_exceeded)
    out.outcome = SearchOutcome::budget_exceeded;
  else
    out.outcome = SearchOutcome::exhausted;
  if (enumerate && any_exceeded)
    throw IndeterminateError("enumeration ran out of budget; counts would be incomplete");
  out.stats.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return out;
}

EdgeColoring leaf_to_coloring(const Ctx& ctx, const std::vector<std::int8_t>& leaf) {
  std::vector<std::uint8_t> colors(leaf.begin(), leaf.end());
  return EdgeColoring(ctx.host, ctx.palette, std::move(colors));
}

}  // namespace

FreeSearchResult find_free_coloring(const ArrowQuery& q) {
  Ctx ctx = build_ctx(q, /*for_enumeration=*/false);
  RunResult run = run_search(ctx, /*enumerate=*/false);
  FreeSearchResult res;
  res.outcome = run.outcome;
  res.stats = run.stats;
  if (run.outcome == SearchOutcome::found_free) res.coloring = leaf_to_coloring(ctx, run.leaf);
  return res;
}

ArrowVerdict arrows(const ArrowQuery& q) {
  FreeSearchResult res = find_free_coloring(q);
  if (res.outcome == SearchOutcome::budget_exceeded)
    throw IndeterminateError("arrowing search exhausted its budget after " +
                             std::to_string(res.stats.nodes) + " nodes");
  ArrowVerdict v;
  v.arrows = res.outcome == SearchOutcome::exhausted;
  v.certificate = res.coloring;
  v.stats = res.stats;
  return v;
}

MinRamseyResult min_ramsey(const Forest& f, const std::vector<int>& cliques, int cap,
                           const SearchLimits& limits) {
  if (cap < 1 || cap > kMaxOrder) throw CapacityError("min-ramsey cap must lie in 1..64");
  MinRamseyResult out;
  std::optional<EdgeColoring> below;
  for (int n = 1; n <= cap; ++n) {
    ArrowQuery q{build_complete(n), f, cliques, limits};
    ArrowVerdict v = arrows(q);
    out.stats.nodes += v.stats.nodes;
    out.stats.prunes += v.stats.prunes;
    out.stats.elapsed_seconds += v.stats.elapsed_seconds;
    if (v.arrows) {
      out.value = n;
      out.certificate_below = below;
      return out;
    }
    below = v.certificate;
  }
  throw CapacityError("no order up to " + std::to_string(cap) + " arrows the targets");
}

MinStarResult min_star(const Forest& f, const std::vector<int>& cliques, int ramsey_value,
                       const SearchLimits& limits) {
  if (ramsey_value < 2 || ramsey_value > kMaxOrder + 1)
    throw CapacityError("min-star needs a Ramsey value in 2..65");
  MinStarResult out;
  std::optional<EdgeColoring> below;
  for (int k = 0; k <= ramsey_value - 1; ++k) {
    ArrowQuery q{build_pendant_star(ramsey_value - 1, k), f, cliques, limits};
    ArrowVerdict v = arrows(q);
    out.stats.nodes += v.stats.nodes;
    out.stats.prunes += v.stats.prunes;
    out.stats.elapsed_seconds += v.stats.elapsed_seconds;
    if (v.arrows) {
      out.value = k;
      out.certificate_below = below;
      return out;
    }
    below = v.certificate;
  }
  throw CapacityError("no pendant degree below the Ramsey value arrows the targets; "
                      "the supplied Ramsey value is too large");
}

std::vector<EdgeColoring> enumerate_free_colorings(const Graph& g,
                                                   const std::optional<Forest>& forest,
                                                   const std::vector<int>& cliques, bool dedup,
                                                   const SearchLimits& limits) {
  ArrowQuery q{g, forest, cliques, limits};
  Ctx ctx = build_ctx(q, /*for_enumeration=*/true);
  if (dedup && g.order() > kDefaultCanonicalCap)
    throw CapacityError("deduplication requires host order within the canonical cap");
  RunResult run = run_search(ctx, /*enumerate=*/true);
  std::vector<EdgeColoring> out;
  std::set<std::string> seen;
  bool two_color_complete = ctx.palette == 2 && g.is_complete();
  for (const auto& leaf : run.all) {
    EdgeColoring col = leaf_to_coloring(ctx, leaf);
    if (dedup) {
      // on a complete 2-colored host the class-0 graph determines the rest
      std::string key = two_color_complete ? canonical_form(col.color_class(0))
                                           : canonical_form(col);
      if (!seen.insert(key).second) continue;
    }
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace ramsey
