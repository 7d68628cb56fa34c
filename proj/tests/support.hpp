#pragma once

// Brute-force reference routines for tests. Deliberately naive and independent of the
// library's closure engine: sets are bitmasks, hulls are plain fixed-point sweeps.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "p3c/graph.hpp"

namespace ref {

using Mask = std::uint64_t;

inline std::vector<Mask> adjacency(const p3c::Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

inline Mask hull(const std::vector<Mask>& adj, Mask a) {
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (!(a >> v & 1) && std::popcount(adj[v] & a) >= 2) {
        a |= Mask{1} << v;
        grew = true;
      }
  }
  return a;
}

inline bool independent(const std::vector<Mask>& adj, Mask s) {
  for (Mask rest = s; rest; rest &= rest - 1) {
    Mask x = rest & (~rest + 1);
    if (hull(adj, s & ~x) & x) return false;
  }
  return true;
}

inline Mask boundary(const std::vector<Mask>& adj, Mask s) {
  Mask out = hull(adj, s);
  for (Mask rest = s; rest; rest &= rest - 1) out &= ~hull(adj, s & ~(rest & (~rest + 1)));
  return out;
}

// Plain enumeration of all 2^n subsets.
inline int beta_c(const p3c::Graph& g) {
  auto adj = adjacency(g);
  int best = 0;
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s)
    if (std::popcount(s) > best && independent(adj, s)) best = std::popcount(s);
  return best;
}

inline int caratheodory(const p3c::Graph& g) {
  auto adj = adjacency(g);
  int best = 0;
  for (Mask s = 1; s < (Mask{1} << g.order()); ++s)
    if (std::popcount(s) > best && boundary(adj, s)) best = std::popcount(s);
  return best;
}

inline Mask mask_of(const p3c::VertexSet& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

inline p3c::VertexSet set_of(Mask m) {
  std::vector<p3c::Vertex> ids;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) ids.push_back(v);
  return p3c::VertexSet(ids);
}

// Edge list written out by hand: s=1, s2=2, s1=3, x=4, y=5 (1-based in text).
inline constexpr const char* kSampleTree = "5 4\n1 2\n1 5\n3 5\n4 5\n";
inline constexpr int s = 0, s2 = 1, s1 = 2, x = 3, y = 4;

inline p3c::Graph graph_from_edges(int n, std::vector<p3c::Edge> edges) { return p3c::Graph(n, edges); }

inline p3c::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<p3c::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return p3c::Graph(n, edges);
}

inline p3c::VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<p3c::Vertex> ids;
  for (int v = 0; v < n; ++v)
    if (coin(rng)) ids.push_back(v);
  return p3c::VertexSet(ids);
}

}  // namespace ref
