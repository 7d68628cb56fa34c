#include "p3c/cograph.hpp"

#include <algorithm>

namespace p3c {

std::size_t Cotree::add_leaf(Vertex v) {
  nodes_.push_back({Kind::leaf, v, {}});
  return nodes_.size() - 1;
}

std::size_t Cotree::add_node(Kind kind, std::vector<std::size_t> children) {
  if (kind == Kind::leaf || children.size() < 2)
    throw Error(ErrorCode::argument, "internal cotree node needs >= 2 children");
  for (auto c : children)
    if (c >= nodes_.size()) throw Error(ErrorCode::argument, "cotree child id out of range");
  nodes_.push_back({kind, -1, std::move(children)});
  return nodes_.size() - 1;
}

std::vector<Vertex> Cotree::leaves(std::size_t id) const {
  std::vector<Vertex> out;
  std::vector<std::size_t> stack{id};
  while (!stack.empty()) {
    const Node& nd = node(stack.back());
    stack.pop_back();
    if (nd.kind == Kind::leaf) out.push_back(nd.vertex);
    for (auto c : nd.children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Cotree::validate(Vertex n) const {
  if (nodes_.empty() || root_ >= nodes_.size()) throw Error(ErrorCode::argument, "empty cotree");
  std::vector<int> seen_node(nodes_.size(), 0);
  std::vector<int> seen_vertex(static_cast<std::size_t>(n), 0);
  std::vector<std::size_t> stack{root_};
  while (!stack.empty()) {
    auto id = stack.back();
    stack.pop_back();
    if (seen_node[id]++) throw Error(ErrorCode::argument, "cotree node reached twice");
    const Node& nd = nodes_[id];
    if (nd.kind == Kind::leaf) {
      if (nd.vertex < 0 || nd.vertex >= n || seen_vertex[static_cast<std::size_t>(nd.vertex)]++)
        throw Error(ErrorCode::argument, "cotree leaves are not the vertex set");
    } else if (nd.children.size() < 2) {
      throw Error(ErrorCode::argument, "internal cotree node with < 2 children");
    }
    for (auto c : nd.children) stack.push_back(c);
  }
  for (int s : seen_vertex)
    if (!s) throw Error(ErrorCode::argument, "cotree misses a vertex");
}

Graph Cotree::evaluate(Vertex n) const {
  validate(n);
  std::vector<Edge> es;
  for (const Node& nd : nodes_) {
    if (nd.kind != Kind::join_node) continue;
    for (std::size_t i = 0; i < nd.children.size(); ++i)
      for (std::size_t j = i + 1; j < nd.children.size(); ++j)
        for (Vertex u : leaves(nd.children[i]))
          for (Vertex v : leaves(nd.children[j])) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

namespace {

class Builder {
 public:
  explicit Builder(const Graph& g)
      : g_(g), n_(static_cast<std::size_t>(g.order())), adj_(n_ * n_, 0), mark_(n_, 0) {
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v : g.neighbors(u)) adj_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] = 1;
  }

  std::size_t build(const std::vector<Vertex>& u) {
    if (u.size() == 1) return tree.add_leaf(u.front());
    auto parts = split(u, false);
    if (parts.size() > 1) return node(Cotree::Kind::union_node, parts);
    parts = split(u, true);
    if (parts.size() > 1) return node(Cotree::Kind::join_node, parts);
    throw NotCographError(find_p4(u));
  }

  Cotree tree;

 private:
  bool adj(Vertex a, Vertex b) const { return adj_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)] != 0; }

  std::size_t node(Cotree::Kind kind, const std::vector<std::vector<Vertex>>& parts) {
    std::vector<std::size_t> kids;
    for (const auto& p : parts) kids.push_back(build(p));
    return tree.add_node(kind, std::move(kids));
  }

  // Components of G[u] or of its complement, each sorted, ordered by smallest member.
  std::vector<std::vector<Vertex>> split(const std::vector<Vertex>& u, bool complement) {
    std::vector<Vertex> rest = u;  // unvisited, sorted
    std::vector<std::vector<Vertex>> out;
    while (!rest.empty()) {
      std::vector<Vertex> comp{rest.front()}, queue{rest.front()};
      rest.erase(rest.begin());
      while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        std::vector<Vertex> keep;
        for (Vertex w : rest) {
          if (adj(v, w) != complement) {
            comp.push_back(w);
            queue.push_back(w);
          } else {
            keep.push_back(w);
          }
        }
        rest.swap(keep);
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::vector<Vertex> find_p4(const std::vector<Vertex>& u) {
    for (Vertex v : u) mark_[static_cast<std::size_t>(v)] = 1;
    for (Vertex b : u)
      for (Vertex c : g_.neighbors(b)) {
        if (!mark_[static_cast<std::size_t>(c)]) continue;
        for (Vertex a : g_.neighbors(b)) {
          if (!mark_[static_cast<std::size_t>(a)] || a == c || adj(a, c)) continue;
          for (Vertex d : g_.neighbors(c)) {
            if (!mark_[static_cast<std::size_t>(d)] || d == b || adj(d, b) || adj(a, d)) continue;
            return {a, b, c, d};
          }
        }
      }
    return {};
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint8_t> mark_;
};

}  // namespace

Cotree build_cotree(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorCode::argument, "empty graph has no cotree");
  Builder b(g);
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  b.tree.set_root(b.build(all));
  return std::move(b.tree);
}

bool is_cograph(const Graph& g) {
  try {
    build_cotree(g);
    return true;
  } catch (const NotCographError&) {
    return false;
  }
}

namespace {

struct Eval {
  int value;
  std::vector<Vertex> witness;
};

Eval evaluate(const Cotree& t, std::size_t id) {
  const auto& nd = t.node(id);
  if (nd.kind == Cotree::Kind::leaf) return {1, {nd.vertex}};
  if (nd.kind == Cotree::Kind::union_node) {
    Eval sum{0, {}};
    for (auto c : nd.children) {
      Eval e = evaluate(t, c);
      sum.value += e.value;
      sum.witness.insert(sum.witness.end(), e.witness.begin(), e.witness.end());
    }
    return sum;
  }
  // Join: any two vertices, or one vertex per component of G - u for a singleton part u.
  auto all = t.leaves(id);
  Eval best{2, {all[0], all[1]}};
  const std::size_t k = nd.children.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (t.node(nd.children[i]).kind != Cotree::Kind::leaf || k != 2) continue;
    const auto& other = t.node(nd.children[1 - i]);
    if (other.kind != Cotree::Kind::union_node) continue;
    if (static_cast<int>(other.children.size()) <= best.value) continue;
    Eval e{static_cast<int>(other.children.size()), {}};
    for (auto c : other.children) e.witness.push_back(t.leaves(c).front());
    best = std::move(e);
  }
  return best;
}

}  // namespace

CographSolution beta_c_cograph(const Cotree& t) {
  Vertex n = 0;
  for (std::size_t id = 0; id < t.node_count(); ++id) n += t.node(id).kind == Cotree::Kind::leaf;
  t.validate(n);
  Eval e = evaluate(t, t.root());
  return {e.value, VertexSet(std::move(e.witness))};
}

}  // namespace p3c
