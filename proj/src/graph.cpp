#include "p3c/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <sstream>

#include "p3c/cograph.hpp"

namespace p3c {

NotCographError::NotCographError(std::vector<int> witness)
    : Error(ErrorCode::not_cograph, "graph is not a cograph (induced P4)"),
      witness_(std::move(witness)) {}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(ids.begin(), ids.end(), 0);
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

VertexSet VertexSet::with(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
  if (it == s.ids_.end() || *it != v) s.ids_.insert(it, v);
  return s;
}

VertexSet VertexSet::without(Vertex v) const {
  VertexSet s = *this;
  auto it = std::lower_bound(s.ids_.begin(), s.ids_.end(), v);
  if (it != s.ids_.end() && *it == v) s.ids_.erase(it);
  return s;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet s;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(s.ids_));
  return s;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet s;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(s.ids_));
  return s;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

void VertexSet::check_range(Vertex n) const {
  for (Vertex v : ids_)
    if (v < 0 || v >= n)
      throw Error(ErrorCode::invalid_set,
                  "vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(n));
}

Graph::Graph(Vertex n) {
  if (n < 0) throw Error(ErrorCode::argument, "negative vertex count");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(Vertex n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error(ErrorCode::argument, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::argument, "self-loop");
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  m_ = 0;
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m_ += a.size();
  }
  m_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> index(adj_.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (Vertex u : keep)
    for (Vertex v : neighbors(u))
      if (u < v && index[static_cast<std::size_t>(v)] >= 0)
        es.emplace_back(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
  return Graph(static_cast<Vertex>(keep.size()), es);
}

PermutationDiagram::PermutationDiagram(std::vector<Vertex> bottom) : bottom_(std::move(bottom)) {
  inverse_.assign(bottom_.size(), -1);
  for (std::size_t v = 0; v < bottom_.size(); ++v) {
    Vertex p = bottom_[v];
    if (p < 0 || static_cast<std::size_t>(p) >= bottom_.size() || inverse_[static_cast<std::size_t>(p)] != -1)
      throw Error(ErrorCode::argument, "bottom positions are not a permutation");
    inverse_[static_cast<std::size_t>(p)] = static_cast<Vertex>(v);
  }
}

Graph diagram_to_graph(const PermutationDiagram& d) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < d.size(); ++u)
    for (Vertex v = u + 1; v < d.size(); ++v)
      if (d.bottom(v) < d.bottom(u)) es.emplace_back(u, v);
  return Graph(d.size(), es);
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long x = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(line, "not an integer: '" + std::string(tok) + "'");
  return x;
}

bool skip(std::string_view line) {
  auto t = tokens(line);
  return t.empty() || t.front().front() == '#';
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1, m = -1;
  std::vector<Edge> es;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    auto t = tokens(line);
    if (t.size() != 2) throw ParseError(lineno, "expected two integers");
    long long a = to_int(t[0], lineno), b = to_int(t[1], lineno);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError(lineno, "negative header value");
      if (a > 10'000'000) throw ParseError(lineno, "vertex count too large");
      n = a;
      m = b;
      continue;
    }
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(lineno, "vertex id out of range");
    if (a == b) throw ParseError(lineno, "self-loop");
    if (static_cast<long long>(es.size()) == m) throw ParseError(lineno, "more edges than declared");
    es.emplace_back(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
  }
  if (n < 0) throw ParseError(lineno + 1, "missing 'n m' header");
  if (static_cast<long long>(es.size()) != m)
    throw ParseError(lineno + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(es.size()));
  return Graph(static_cast<Vertex>(n), es);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

PermutationDiagram parse_permutation(std::istream& in) {
  std::string line;
  std::size_t lineno = 0, found = 0;
  std::vector<Vertex> bottom;
  while (std::getline(in, line)) {
    ++lineno;
    if (skip(line)) continue;
    if (found++) throw ParseError(lineno, "permutation must be a single line");
    for (auto tok : tokens(line)) {
      long long x = to_int(tok, lineno);
      if (x < 1 || x > 10'000'000) throw ParseError(lineno, "position out of range");
      bottom.push_back(static_cast<Vertex>(x - 1));
    }
    std::vector<char> seen(bottom.size(), 0);
    for (Vertex p : bottom) {
      if (static_cast<std::size_t>(p) >= bottom.size() || seen[static_cast<std::size_t>(p)])
        throw ParseError(lineno, "not a bijection of 1.." + std::to_string(bottom.size()));
      seen[static_cast<std::size_t>(p)] = 1;
    }
  }
  if (!found) throw ParseError(lineno + 1, "empty permutation");
  return PermutationDiagram(std::move(bottom));
}

PermutationDiagram parse_permutation(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_permutation(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

std::string format_permutation(const PermutationDiagram& d) {
  std::ostringstream out;
  for (Vertex v = 0; v < d.size(); ++v) out << (v ? " " : "") << d.bottom(v) + 1;
  out << '\n';
  return out.str();
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    comp[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) && is_connected(g);
}

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != static_cast<std::size_t>(g.order()) || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

namespace {

std::vector<Vertex> walk(const Graph& g, Vertex start) {
  std::vector<Vertex> out{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex w : g.neighbors(cur))
      if (w != prev) {
        next = w;
        break;
      }
    if (next < 0 || next == start) break;
    out.push_back(next);
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace

std::vector<Vertex> path_order(const Graph& g) {
  if (!is_path(g)) throw Error(ErrorCode::argument, "graph is not a path");
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 1) return walk(g, v);
  return {};
}

std::vector<Vertex> cycle_order(const Graph& g) {
  if (!is_cycle(g)) throw Error(ErrorCode::argument, "graph is not a cycle");
  return walk(g, 0);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), es);
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::path: return "path";
    case GraphClass::cycle: return "cycle";
    case GraphClass::tree: return "tree";
    case GraphClass::cograph: return "cograph";
    case GraphClass::permutation_input: return "permutation-input";
    case GraphClass::generic: return "generic";
  }
  return "generic";
}

GraphClass classify(const Graph& g, bool has_diagram) {
  if (g.order() >= 1 && is_path(g)) return GraphClass::path;
  if (is_cycle(g)) return GraphClass::cycle;
  if (is_tree(g)) return GraphClass::tree;
  if (g.order() >= 1 && is_cograph(g)) return GraphClass::cograph;
  if (has_diagram) return GraphClass::permutation_input;
  return GraphClass::generic;
}

}  // namespace p3c
