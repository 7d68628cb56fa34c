#include "p3c/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "rng.hpp"

namespace p3c {

Graph gen_path(Vertex n) {
  if (n < 1) throw Error(ErrorCode::argument, "path needs n >= 1");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

Graph gen_cycle(Vertex n) {
  if (n < 3) throw Error(ErrorCode::argument, "cycle needs n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es);
}

Graph gen_star(Vertex leaves) {
  if (leaves < 1) throw Error(ErrorCode::argument, "star needs >= 1 leaf");
  std::vector<Edge> es;
  for (Vertex v = 1; v <= leaves; ++v) es.emplace_back(0, v);
  return Graph(leaves + 1, es);
}

// Center 0; leg i is 1 + i*len, ..., len + i*len, starting next to the center.
Graph gen_spider(int legs, int leg_length) {
  if (legs < 1 || leg_length < 1) throw Error(ErrorCode::argument, "spider needs legs >= 1 and length >= 1");
  std::vector<Edge> es;
  for (int i = 0; i < legs; ++i) {
    Vertex prev = 0;
    for (int j = 0; j < leg_length; ++j) {
      Vertex v = 1 + i * leg_length + j;
      es.emplace_back(prev, v);
      prev = v;
    }
  }
  return Graph(1 + legs * leg_length, es);
}

// Rung j is a crossing pair F_j, B_j; positions are (bottom, top), 1-based:
//   F_1 = (1,3), F_j = (2j-2, 2j+1), F_k = (2k-2, 2k)
//   B_1 = (3,1), B_j = (2j+1, 2j-2), B_k = (2k, 2k-2)
Ladder gen_ladder(int k) {
  if (k < 2) throw Error(ErrorCode::argument, "ladder needs k >= 2 rungs");
  auto f = [k](int j) -> std::pair<int, int> {
    if (j == 1) return {1, 3};
    if (j == k) return {2 * k - 2, 2 * k};
    return {2 * j - 2, 2 * j + 1};
  };
  auto b = [k](int j) -> std::pair<int, int> {
    if (j == 1) return {3, 1};
    if (j == k) return {2 * k, 2 * k - 2};
    return {2 * j + 1, 2 * j - 2};
  };
  const int n = 2 * k;
  std::vector<Vertex> bottom(static_cast<std::size_t>(n));
  std::vector<Vertex> fv(static_cast<std::size_t>(k) + 1), bv(static_cast<std::size_t>(k) + 1);
  for (int j = 1; j <= k; ++j) {
    auto [fb, ft] = f(j);
    auto [bb, bt] = b(j);
    bottom[static_cast<std::size_t>(ft - 1)] = fb - 1;
    bottom[static_cast<std::size_t>(bt - 1)] = bb - 1;
    fv[static_cast<std::size_t>(j)] = ft - 1;
    bv[static_cast<std::size_t>(j)] = bt - 1;
  }
  Ladder l;
  l.diagram = PermutationDiagram(bottom);
  std::vector<Edge> es;
  for (int j = 1; j <= k; ++j) {
    auto fj = fv[static_cast<std::size_t>(j)], bj = bv[static_cast<std::size_t>(j)];
    es.emplace_back(fj, bj);
    if (j < k) {
      es.emplace_back(fj, bv[static_cast<std::size_t>(j) + 1]);
      es.emplace_back(bj, fv[static_cast<std::size_t>(j) + 1]);
    }
    bool odd = j % 2 == 1;
    l.top_rail.push_back(odd ? fj : bj);
    l.bottom_rail.push_back(odd ? bj : fj);
  }
  l.graph = Graph(n, es);
  return l;
}

VertexSet ladder_marked_set(const Ladder& l) {
  const auto k = l.top_rail.size();
  std::vector<Vertex> s{l.top_rail[0], l.bottom_rail[1], l.top_rail[k - 1]};
  for (std::size_t j = 4; j <= k; j += 2) s.push_back(l.top_rail[j - 1]);
  return VertexSet(std::move(s));
}

PermutationDiagram gen_random_permutation(Vertex n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::argument, "permutation needs n >= 1");
  detail::Rng rng(seed);
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  rng.shuffle(p);
  return PermutationDiagram(std::move(p));
}

RandomCograph gen_random_cograph(Vertex n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::argument, "cograph needs n >= 1");
  detail::Rng rng(seed);
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  rng.shuffle(vs);
  RandomCograph out;
  std::function<std::size_t(std::vector<Vertex>, bool)> make = [&](std::vector<Vertex> part, bool join) {
    if (part.size() == 1) return out.cotree.add_leaf(part.front());
    std::size_t k = 2 + rng.below(std::min<std::size_t>(part.size(), 4) - 1);
    // k - 1 distinct cut points in 1..size-1.
    std::vector<std::size_t> cuts(part.size() - 1);
    for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = i + 1;
    rng.shuffle(cuts);
    cuts.resize(k - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(part.size());
    std::vector<std::size_t> kids;
    std::size_t from = 0;
    for (auto to : cuts) {
      kids.push_back(make(std::vector<Vertex>(part.begin() + static_cast<std::ptrdiff_t>(from),
                                              part.begin() + static_cast<std::ptrdiff_t>(to)),
                          !join));
      from = to;
    }
    return out.cotree.add_node(join ? Cotree::Kind::join_node : Cotree::Kind::union_node, std::move(kids));
  };
  out.cotree.set_root(make(vs, rng.coin()));
  out.graph = out.cotree.evaluate(n);
  return out;
}

Graph gen_random_tree(Vertex n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::argument, "tree needs n >= 1");
  detail::Rng rng(seed);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  for (Vertex i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
  rng.shuffle(label);
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) {
    auto p = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v)));
    es.emplace_back(label[static_cast<std::size_t>(p)], label[static_cast<std::size_t>(v)]);
  }
  return Graph(n, es);
}

Graph gen_random_graph(Vertex n, double p, std::uint64_t seed) {
  detail::Rng rng(seed);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.unit() < p) es.emplace_back(u, v);
  return Graph(n, es);
}

namespace {

std::string encode(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> parts;
  for (Vertex w : t.neighbors(v))
    if (w != parent) parts.push_back(encode(t, w, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

std::string canonical(const Graph& t) {
  const Vertex n = t.order();
  std::vector<std::size_t> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  Vertex left = n;
  while (left > 2) {
    left -= static_cast<Vertex>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
    layer.swap(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto s = encode(t, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<Graph> all_trees(Vertex n) {
  if (n < 1) throw Error(ErrorCode::argument, "tree needs n >= 1");
  std::vector<Graph> level{Graph(1)};
  for (Vertex size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level)
      for (Vertex v = 0; v < t.order(); ++v) {
        auto es = t.edges();
        es.emplace_back(v, t.order());
        Graph g(size, es);
        if (seen.insert(canonical(g)).second) next.push_back(std::move(g));
      }
    level.swap(next);
  }
  return level;
}

}  // namespace p3c
