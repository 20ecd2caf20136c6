#include "ramsey/calc.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ramsey/errors.hpp"
#include "ramsey/json_io.hpp"

namespace ramsey {

const char* to_string(Provenance p) {
  return p == Provenance::formula ? "formula" : "oracle";
}

namespace {

// Exact classical values with value <= 18, plus the three-color triangle
// case. Kept in sync with data/classical.table (witness files only make
// sense on disk; the (3,3) witness has a builtin fallback).
constexpr const char* kDefaultTableText = R"(# Exact classical Ramsey numbers.
3 3 = 6 verified=oracle
3 4 = 9
3 5 = 14
3 6 = 18
4 4 = 18
3 3 3 = 17
)";

std::string tuple_name(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

// Two 5-cycles: the unique free coloring of K_5 for the triangle pair.
EdgeColoring cycle5_coloring() {
  return EdgeColoring::from_function(build_complete(5), 2, [](int u, int v) {
    int d = (v - u) % 5;
    return (d == 1 || d == 4) ? 0 : 1;
  });
}

}  // namespace

std::vector<int> normalize_cliques(const std::vector<int>& cliques) {
  std::vector<int> out;
  out.reserve(cliques.size());
  for (int m : cliques) {
    if (m < 2)
      throw std::invalid_argument("clique orders must be at least 2, got " + std::to_string(m));
    if (m > 2) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassicalTable ClassicalTable::parse(const std::string& text, const std::string& base_dir) {
  ClassicalTable t;
  t.base_dir_ = base_dir;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    auto eq = std::find(tokens.begin(), tokens.end(), "=");
    if (eq == tokens.begin() || eq == tokens.end() || eq + 1 == tokens.end())
      throw ParseError("table line needs `m1 m2 ... = value`", lineno);
    std::vector<int> tuple;
    Entry e;
    try {
      for (auto it = tokens.begin(); it != eq; ++it) tuple.push_back(std::stoi(*it));
      e.value = std::stoll(*(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("table line needs integer orders and value", lineno);
    }
    for (auto it = eq + 2; it != tokens.end(); ++it) {
      if (it->rfind("witness=", 0) == 0)
        e.witness_file = it->substr(8);
      else if (*it == "verified=oracle")
        e.oracle_verified = true;
      else
        throw ParseError("unknown table token `" + *it + "`", lineno);
    }
    std::vector<int> key;
    try {
      key = normalize_cliques(tuple);
    } catch (const std::invalid_argument& err) {
      throw ParseError(err.what(), lineno);
    }
    if (key.size() < 2) throw ParseError("table entries need at least two orders above 2", lineno);
    if (t.entries_.count(key)) throw ParseError("duplicate table entry " + tuple_name(key), lineno);
    t.entries_[key] = std::move(e);
  }
  return t;
}

ClassicalTable ClassicalTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), std::filesystem::path(path).parent_path().string());
}

const ClassicalTable& ClassicalTable::bundled() {
  static const ClassicalTable table = parse(kDefaultTableText, "");
  return table;
}

long long ClassicalTable::value(const std::vector<int>& cliques) const {
  auto key = normalize_cliques(cliques);
  if (key.empty()) return 2;  // only K_2 targets: the single edge of K_2 decides
  if (key.size() == 1) return key[0];
  auto it = entries_.find(key);
  if (it == entries_.end())
    throw UnknownValueError("no exact classical Ramsey value for tuple " + tuple_name(key));
  return it->second.value;
}

std::optional<EdgeColoring> ClassicalTable::witness(const std::vector<int>& cliques) const {
  auto key = normalize_cliques(cliques);
  if (key.empty()) return EdgeColoring(build_complete(1), 0, {});
  if (key.size() == 1)
    return EdgeColoring::from_function(build_complete(key[0] - 1), 1, [](int, int) { return 0; });
  auto it = entries_.find(key);
  if (it == entries_.end())
    throw UnknownValueError("no exact classical Ramsey value for tuple " + tuple_name(key));
  EdgeColoring w;
  if (!it->second.witness_file.empty()) {
    auto path = std::filesystem::path(base_dir_) / it->second.witness_file;
    w = load_coloring(path.string());
  } else if (key == std::vector<int>{3, 3}) {
    w = cycle5_coloring();
  } else {
    return std::nullopt;
  }
  if (w.graph().order() != it->second.value - 1 || !w.graph().is_complete())
    throw ParseError("witness for " + tuple_name(key) + " must color K_" +
                         std::to_string(it->second.value - 1),
                     0);
  std::optional<Forest> no_forest;
  if (!is_free_coloring(w, no_forest, key))
    throw ParseError("witness for " + tuple_name(key) + " is not a free coloring", 0);
  return w;
}

long long classical_r(const std::vector<int>& cliques, const ClassicalTable& table) {
  return table.value(cliques);
}

EdgeColoring classical_witness_expanded(const std::vector<int>& cliques,
                                        const ClassicalTable& table) {
  auto w = table.witness(cliques);
  if (!w)
    throw UnknownValueError("no witness coloring available for tuple " + tuple_name(cliques));
  // map normalized classes back to the caller's positions; classes of
  // dropped 2-entries stay empty
  std::vector<std::size_t> significant;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (cliques[i] > 2) significant.push_back(i);
  std::stable_sort(significant.begin(), significant.end(),
                   [&](std::size_t a, std::size_t b) { return cliques[a] < cliques[b]; });
  std::vector<int> position_of_class(significant.size());
  for (std::size_t j = 0; j < significant.size(); ++j)
    position_of_class[j] = static_cast<int>(significant[j]);
  const EdgeColoring& base = *w;
  return EdgeColoring::from_function(base.graph(), static_cast<int>(cliques.size()),
                                     [&](int u, int v) {
                                       int c = base.color_of(u, v);
                                       return position_of_class[static_cast<std::size_t>(c)];
                                     });
}

RamseyResult ramsey_forest(const Forest& f, const std::vector<int>& cliques,
                           const ClassicalTable& table) {
  if (f.empty()) throw std::invalid_argument("Ramsey evaluation needs a nonempty forest");
  // zero clique targets: one color class must hold the whole forest
  long long r = cliques.empty() ? 2 : classical_r(cliques, table);
  if (r > 1'000'000'000) throw std::invalid_argument("classical base value out of range");
  JRealization jr = j0_and_max(f, static_cast<int>(r));
  return RamseyResult{jr.value, jr.j0, static_cast<int>(r), Provenance::formula};
}

RamseyResult star_forest(const Forest& f, const std::vector<int>& cliques,
                         const ClassicalTable& table) {
  if (f.empty()) throw std::invalid_argument("star-critical evaluation needs a nonempty forest");
  if (f.has_isolated_vertices())
    throw std::invalid_argument("star-critical values are defined for forests without isolated vertices");
  long long r = cliques.empty() ? 2 : classical_r(cliques, table);
  if (r < 3)
    throw std::invalid_argument("star-critical evaluation needs a classical base value of at least 3");
  JRealization jr = j0_and_max(f, static_cast<int>(r));
  ForestStats st = stats(f);
  long long tail = 0;
  for (auto [i, ki] : st.k)
    if (i >= jr.j0) tail += static_cast<long long>(i) * ki;
  long long value = static_cast<long long>(jr.j0 - 1) * (r - 3) + tail;
  return RamseyResult{value, jr.j0, static_cast<int>(r), Provenance::formula};
}

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

}  // namespace

SizeRamseyBound size_ramsey_upper(const Forest& f, int m, const ClassicalTable& table) {
  RamseyResult big = ramsey_forest(f, {m}, table);
  RamseyResult star = star_forest(f, {m}, table);
  SizeRamseyBound b;
  b.from_star = choose2(big.value - 1) + star.value;
  b.binomial = choose2(big.value) - (big.j0 - 2);
  if (b.from_star != b.binomial)
    throw std::logic_error("size-bound identity failed; formulas are inconsistent");
  return b;
}

long long size_ramsey_upper_multicolor(const Forest& f, const std::vector<int>& cliques,
                                       const ClassicalTable& table) {
  RamseyResult big = ramsey_forest(f, cliques, table);
  RamseyResult star = star_forest(f, cliques, table);
  return choose2(big.value - 1) + star.value;
}

}  // namespace ramsey
