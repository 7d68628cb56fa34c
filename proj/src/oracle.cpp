#include "p3c/oracle.hpp"

#include <bit>

#include "p3c/convexity.hpp"

namespace p3c {
namespace {

using Mask = std::uint64_t;

class BitGraph {
 public:
  explicit BitGraph(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= Mask{1} << w;
  }

  Mask hull(Mask s) const {
    Mask h = s;
    for (bool grew = true; grew;) {
      grew = false;
      Mask frontier = 0;
      for (Mask t = h; t; t &= t - 1) frontier |= adj_[static_cast<std::size_t>(std::countr_zero(t))];
      frontier &= ~h;
      for (; frontier; frontier &= frontier - 1) {
        int v = std::countr_zero(frontier);
        if (std::popcount(adj_[static_cast<std::size_t>(v)] & h) >= 2) {
          h |= Mask{1} << v;
          grew = true;
        }
      }
    }
    return h;
  }

  // Only the newest element needs checking against an already independent set, but every
  // older element can be captured once it is present.
  bool independent(Mask s) const {
    for (Mask t = s; t; t &= t - 1) {
      Mask x = t & -t;
      if (hull(s & ~x) & x) return false;
    }
    return true;
  }

  Mask boundary(Mask s) const {
    Mask h = hull(s), covered = 0;
    for (Mask t = s; t; t &= t - 1) covered |= hull(s & ~(t & -t));
    return h & ~covered;
  }

  Vertex order() const { return n_; }

 private:
  Vertex n_;
  std::vector<Mask> adj_;
};

void check_bound(const Graph& g, const OracleOptions& o) {
  Vertex bound = std::min(o.bound, kOracleHardLimit);
  if (g.order() > bound)
    throw Error(ErrorCode::size_refusal, "oracle refuses n=" + std::to_string(g.order()) +
                                             " (bound " + std::to_string(bound) + ")");
}

VertexSet to_set(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return VertexSet(std::move(out));
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= Mask{1} << v;
  return m;
}

struct Search {
  const BitGraph& g;
  std::size_t cap;
  std::size_t best = 0;
  Mask best_set = 0;
  std::uint64_t explored = 0;

  // Extends s (independent, size k) with vertices >= next, in increasing id order.
  void run(Mask s, std::size_t k, Vertex next) {
    ++explored;
    if (k > best) {
      best = k;
      best_set = s;
    }
    for (Vertex v = next; v < g.order(); ++v) {
      if (best >= cap) return;
      if (k + static_cast<std::size_t>(g.order() - v) <= best) return;
      Mask t = s | (Mask{1} << v);
      if (g.independent(t)) run(t, k + 1, v + 1);
    }
  }
};

// Independent k-sets in lexicographic order; returns the first irredundant one.
struct IrredundantSearch {
  const BitGraph& g;
  std::size_t k;
  std::uint64_t explored = 0;
  std::optional<Mask> found;

  void run(Mask s, std::size_t size, Vertex next) {
    if (found) return;
    if (size == k) {
      ++explored;
      if (g.boundary(s)) found = s;
      return;
    }
    for (Vertex v = next; v < g.order() && !found; ++v) {
      if (size + static_cast<std::size_t>(g.order() - v) < k) return;
      Mask t = s | (Mask{1} << v);
      if (g.independent(t)) run(t, size + 1, v + 1);
    }
  }
};

}  // namespace

OracleResult beta_c_oracle(const Graph& g, const OracleOptions& options) {
  check_bound(g, options);
  BitGraph bg(g);
  Search s{bg, options.limit.value_or(static_cast<std::size_t>(g.order()))};
  s.run(0, 0, 0);
  return {static_cast<std::int64_t>(s.best), to_set(s.best_set), s.explored};
}

// Irredundant sets are convexly independent, so candidates are drawn from independent sets
// of each size, largest first; beta_c bounds the first size worth trying.
OracleResult caratheodory_oracle(const Graph& g, const OracleOptions& options) {
  check_bound(g, options);
  OracleResult beta = beta_c_oracle(g, {options.bound, std::nullopt});
  BitGraph bg(g);
  OracleResult r;
  r.explored = beta.explored;
  for (auto k = static_cast<std::size_t>(beta.value); k >= 1; --k) {
    IrredundantSearch s{bg, k, 0, std::nullopt};
    s.run(0, 0, 0);
    r.explored += s.explored;
    if (s.found) {
      r.value = static_cast<std::int64_t>(k);
      r.witness = to_set(*s.found);
      return r;
    }
  }
  return r;
}

VertexSet sigma_boundary(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::argument, "boundary of the empty set");
  s.check_range(g.order());
  if (g.order() <= kOracleHardLimit) return to_set(BitGraph(g).boundary(to_mask(s)));
  VertexSet out = hull_set(g, s);
  for (Vertex x : s) out = out.minus(hull_set(g, s.without(x)));
  return out;
}

bool is_irredundant(const Graph& g, const VertexSet& s) { return !sigma_boundary(g, s).empty(); }

}  // namespace p3c
