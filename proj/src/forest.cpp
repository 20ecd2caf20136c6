#include "ramsey/forest.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ramsey/errors.hpp"

namespace ramsey {

Tree Tree::path(int n) {
  if (n < 1) throw std::invalid_argument("path order must be positive");
  Tree t;
  t.order = n;
  for (int i = 0; i + 1 < n; ++i) t.edges.emplace_back(i, i + 1);
  return t;
}

Tree Tree::star(int n) {
  if (n < 1) throw std::invalid_argument("star order must be positive");
  Tree t;
  t.order = n;
  for (int i = 1; i < n; ++i) t.edges.emplace_back(0, i);
  return t;
}

Tree Tree::from_edges(int order, std::vector<std::pair<int, int>> edges) {
  if (order < 1) throw std::invalid_argument("tree order must be positive");
  if (static_cast<int>(edges.size()) != order - 1)
    throw std::invalid_argument("a tree on " + std::to_string(order) + " vertices needs exactly " +
                                std::to_string(order - 1) + " edges");
  std::vector<std::vector<int>> adj(order);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= order || u == v) throw std::invalid_argument("tree edge out of range");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  // connectivity (acyclicity follows from the edge count)
  std::vector<char> seen(order, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != order) throw std::invalid_argument("edge list does not describe a tree");
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate tree edge");
  Tree t;
  t.order = order;
  t.edges = std::move(edges);
  return t;
}

Graph Tree::to_graph() const {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Tree::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

Tree prufer_decode(const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size()) + 2;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] < 0 || seq[i] >= n)
      throw ParseError("Prüfer entry " + std::to_string(seq[i]) + " out of range 0.." +
                           std::to_string(n - 1),
                       i);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  std::vector<std::pair<int, int>> edges;
  for (int s : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
    if (--deg[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Tree::from_edges(n, std::move(edges));
}

namespace {

std::string ahu_encode(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> child;
  for (int w : adj[v])
    if (w != parent) child.push_back(ahu_encode(adj, w, v));
  std::sort(child.begin(), child.end());
  std::string s = "(";
  for (const auto& c : child) s += c;
  s += ")";
  return s;
}

std::vector<int> tree_centers(const Tree& t) {
  int n = t.order;
  if (n == 1) return {0};
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_label(const Tree& t) {
  std::vector<std::vector<int>> adj(t.order);
  for (auto [u, v] : t.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  auto centers = tree_centers(t);
  if (centers.size() == 1) return ahu_encode(adj, centers[0], -1);
  // bicentral: encode both halves of the center edge, order-independently
  std::string a = ahu_encode(adj, centers[0], centers[1]);
  std::string b = ahu_encode(adj, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return "[" + a + b + "]";
}

Forest::Forest(std::vector<Tree> components) : components_(std::move(components)) {
  std::vector<std::pair<std::pair<int, std::string>, std::size_t>> keyed;
  keyed.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    keyed.push_back({{components_[i].order, tree_label(components_[i])}, i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<Tree> sorted;
  sorted.reserve(components_.size());
  labels_.reserve(components_.size());
  for (auto& [key, idx] : keyed) {
    sorted.push_back(std::move(components_[idx]));
    labels_.push_back(std::move(key.second));
  }
  components_ = std::move(sorted);
}

int Forest::total_order() const {
  int t = 0;
  for (const auto& c : components_) t += c.order;
  return t;
}

bool Forest::has_isolated_vertices() const {
  for (const auto& c : components_)
    if (c.order == 1) return true;
  return false;
}

Graph Forest::to_graph() const {
  Graph g(total_order());
  int base = 0;
  for (const auto& c : components_) {
    for (auto [u, v] : c.edges) g.add_edge(base + u, base + v);
    base += c.order;
  }
  return g;
}

namespace {

bool tree_is_path(const Tree& t) {
  if (t.order <= 2) return true;
  std::vector<int> deg(t.order, 0);
  for (auto [u, v] : t.edges) {
    ++deg[u];
    ++deg[v];
  }
  return *std::max_element(deg.begin(), deg.end()) == 2;
}

bool tree_is_star(const Tree& t) {
  if (t.order <= 2) return true;
  std::vector<int> deg(t.order, 0);
  for (auto [u, v] : t.edges) {
    ++deg[u];
    ++deg[v];
  }
  return *std::max_element(deg.begin(), deg.end()) == t.order - 1;
}

std::string tree_to_string(const Tree& t) {
  if (t.order == 1) return "K1";
  if (t.order == 2) return "K2";
  if (tree_is_path(t)) return "P" + std::to_string(t.order);
  if (tree_is_star(t)) return "S" + std::to_string(t.order);
  std::string s = "E(";
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(t.edges[i].first) + "," + std::to_string(t.edges[i].second) + ")";
  }
  return s + ")";
}

}  // namespace

std::string Forest::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < components_.size()) {
    std::size_t j = i;
    while (j < components_.size() && labels_[j] == labels_[i] &&
           components_[j].order == components_[i].order)
      ++j;
    if (!out.empty()) out += "+";
    std::size_t count = j - i;
    if (count > 1) out += std::to_string(count) + "*";
    out += tree_to_string(components_[i]);
    i = j;
  }
  return out;
}

namespace {

class ForestParser {
 public:
  explicit ForestParser(std::string_view text) : text_(text) {}

  Forest parse() {
    std::vector<Tree> comps;
    parse_term(comps);
    skip_ws();
    while (!done() && peek() == '+') {
      ++pos_;
      parse_term(comps);
      skip_ws();
    }
    skip_ws();
    if (!done()) throw ParseError("unexpected trailing input", pos_);
    return Forest(std::move(comps));
  }

 private:
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) throw ParseError("expected an integer", start);
    long long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > 1'000'000) throw ParseError("integer too large", start);
    }
    return static_cast<int>(v);
  }

  void expect(char c) {
    skip_ws();
    if (done() || peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void parse_term(std::vector<Tree>& comps) {
    skip_ws();
    if (done()) throw ParseError("expected a forest term", pos_);
    int repeat = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t at = pos_;
      repeat = parse_int();
      if (repeat < 1) throw ParseError("repeat count must be positive", at);
      expect('*');
    }
    Tree t = parse_tree();
    for (int i = 0; i < repeat; ++i) comps.push_back(t);
  }

  Tree parse_tree() {
    skip_ws();
    if (done()) throw ParseError("expected a tree", pos_);
    char c = peek();
    std::size_t at = pos_;
    switch (c) {
      case 'P': {
        ++pos_;
        int n = parse_int();
        if (n < 1) throw ParseError("path order must be positive", at);
        return Tree::path(n);
      }
      case 'S': {
        ++pos_;
        int n = parse_int();
        if (n < 1) throw ParseError("star order must be positive", at);
        return Tree::star(n);
      }
      case 'K': {
        ++pos_;
        int n = parse_int();
        if (n != 1 && n != 2) throw ParseError("only K1 and K2 are tree atoms", at);
        return Tree::path(n);
      }
      case 'T': {
        ++pos_;
        expect('(');
        std::vector<int> seq;
        seq.push_back(parse_int());
        skip_ws();
        while (!done() && peek() == ',') {
          ++pos_;
          seq.push_back(parse_int());
          skip_ws();
        }
        expect(')');
        try {
          return prufer_decode(seq);
        } catch (const ParseError& e) {
          throw ParseError(e.what(), at);
        }
      }
      case 'E': {
        ++pos_;
        expect('(');
        std::vector<std::pair<int, int>> edges;
        edges.push_back(parse_pair());
        skip_ws();
        while (!done() && peek() == ',') {
          ++pos_;
          edges.push_back(parse_pair());
          skip_ws();
        }
        expect(')');
        int order = 0;
        for (auto [u, v] : edges) order = std::max({order, u + 1, v + 1});
        try {
          return Tree::from_edges(order, edges);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), at);
        }
      }
      default:
        throw ParseError("expected P, S, K, T or E", pos_);
    }
  }

  std::pair<int, int> parse_pair() {
    expect('(');
    int u = parse_int();
    expect(',');
    int v = parse_int();
    expect(')');
    return {u, v};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Forest parse_forest(std::string_view spec) { return ForestParser(spec).parse(); }

ForestStats stats(const Forest& f) {
  ForestStats st;
  for (const auto& c : f.components()) {
    ++st.k[c.order];
    st.C.insert(c.order);
    st.total += c.order;
    st.n = std::max(st.n, c.order);
  }
  st.q = static_cast<int>(st.C.size());
  return st;
}

JRealization j0_and_max(const ForestStats& st, int base_r) {
  if (st.total == 0) throw std::invalid_argument("j0_and_max needs a nonempty forest");
  if (base_r < 2) throw std::invalid_argument("base Ramsey value must be at least 2");
  JRealization best{0, -1};
  for (int j : st.C) {
    long long tail = 0;
    for (auto [i, ki] : st.k)
      if (i >= j) tail += static_cast<long long>(i) * ki;
    long long val = static_cast<long long>(j - 1) * (base_r - 2) + tail;
    if (val > best.value) best = {j, val};
  }
  return best;
}

JRealization j0_and_max(const Forest& f, int base_r) { return j0_and_max(stats(f), base_r); }

}  // namespace ramsey
