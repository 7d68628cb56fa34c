#include "p3c/convexity.hpp"

#include <algorithm>
#include <deque>

#include "rng.hpp"

namespace p3c {

std::optional<std::pair<Vertex, Vertex>> HullTrace::parents_of(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= parents.size() || parents[static_cast<std::size_t>(v)].first < 0)
    return std::nullopt;
  return parents[static_cast<std::size_t>(v)];
}

HullTrace hull(const Graph& g, const VertexSet& a, QueueOrder order, std::uint64_t seed) {
  a.check_range(g.order());
  const auto n = static_cast<std::size_t>(g.order());
  HullTrace t;
  t.parents.assign(n, {-1, -1});
  std::vector<std::uint8_t> in(n, 0), cnt(n, 0);
  std::vector<Vertex> first(n, -1);
  std::deque<Vertex> pending;
  detail::Rng rng(seed);

  for (Vertex v : a) {
    in[static_cast<std::size_t>(v)] = 1;
    t.order.push_back(v);
    pending.push_back(v);
  }
  if (order == QueueOrder::reverse) std::reverse(pending.begin(), pending.end());

  while (!pending.empty()) {
    Vertex w;
    if (order == QueueOrder::forward) {
      w = pending.front();
      pending.pop_front();
    } else if (order == QueueOrder::reverse) {
      w = pending.back();
      pending.pop_back();
    } else {
      auto i = rng.below(pending.size());
      w = pending[i];
      pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(i));
    }
    for (Vertex v : g.neighbors(w)) {
      auto vi = static_cast<std::size_t>(v);
      if (in[vi]) continue;
      if (++cnt[vi] == 1) {
        first[vi] = w;
        continue;
      }
      in[vi] = 1;
      t.parents[vi] = {std::min(first[vi], w), std::max(first[vi], w)};
      t.order.push_back(v);
      pending.push_back(v);
    }
  }
  std::vector<Vertex> members(t.order);
  t.hull = VertexSet(std::move(members));
  return t;
}

VertexSet hull_set(const Graph& g, const VertexSet& a) {
  a.check_range(g.order());
  Closure c(g);
  c.add_all(a.values());
  return VertexSet(c.members());
}

bool is_convex(const Graph& g, const VertexSet& w) {
  w.check_range(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (w.contains(v)) continue;
    int k = 0;
    for (Vertex x : g.neighbors(v)) k += w.contains(x);
    if (k >= 2) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> two_path_certificate(const Graph& g, const VertexSet& s, Vertex x) {
  HullTrace t = hull(g, s);
  if (x < 0 || x >= g.order() || !t.contains(x)) return std::nullopt;
  std::vector<std::uint8_t> need(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{x};
  need[static_cast<std::size_t>(x)] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (auto p = t.parents_of(v))
      for (Vertex q : {p->first, p->second})
        if (!need[static_cast<std::size_t>(q)]) {
          need[static_cast<std::size_t>(q)] = 1;
          stack.push_back(q);
        }
  }
  std::vector<Vertex> seq;
  for (Vertex v : t.order)
    if (need[static_cast<std::size_t>(v)]) seq.push_back(v);
  return seq;
}

IndependenceVerdict is_convexly_independent(const Graph& g, const VertexSet& s) {
  s.check_range(g.order());
  Closure c(g);
  for (Vertex x : s) {
    c.reset();
    bool captured = false;
    for (Vertex v : s)
      if (v != x && !c.add(v, x)) {
        captured = true;
        break;
      }
    if (captured) return {false, x, hull(g, s.without(x))};
  }
  return {};
}

bool is_two_packing(const Graph& g, const VertexSet& s) {
  s.check_range(g.order());
  std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) {
    if (++hits[static_cast<std::size_t>(v)] > 1) return false;
    for (Vertex w : g.neighbors(v))
      if (++hits[static_cast<std::size_t>(w)] > 1) return false;
  }
  return true;
}

Closure::Closure(const Graph& g)
    : g_(&g),
      active_(static_cast<std::size_t>(g.order()), 0),
      count_(static_cast<std::size_t>(g.order()), 0) {
  members_.reserve(active_.size());
  queue_.reserve(active_.size());
}

void Closure::reset() {
  for (Vertex v : members_) {
    active_[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : g_->neighbors(v)) count_[static_cast<std::size_t>(w)] = 0;
  }
  members_.clear();
  queue_.clear();
}

void Closure::restore(const Snapshot& s) {
  active_ = s.active;
  count_ = s.count;
  members_ = s.members;
  queue_.clear();
}

bool Closure::add(Vertex v, Vertex stop) {
  auto vi = static_cast<std::size_t>(v);
  if (active_[vi]) return v != stop;
  active_[vi] = 1;
  members_.push_back(v);
  queue_.push_back(v);
  if (v == stop) return false;
  return propagate(stop);
}

bool Closure::add_all(std::span<const Vertex> vs, Vertex stop) {
  for (Vertex v : vs)
    if (!add(v, stop)) return false;
  return true;
}

bool Closure::propagate(Vertex stop) {
  std::size_t head = 0;
  while (head < queue_.size()) {
    Vertex w = queue_[head++];
    for (Vertex v : g_->neighbors(w)) {
      auto vi = static_cast<std::size_t>(v);
      if (active_[vi]) continue;
      if (++count_[vi] < 2) continue;
      active_[vi] = 1;
      members_.push_back(v);
      if (v == stop) {
        queue_.clear();
        return false;
      }
      queue_.push_back(v);
    }
  }
  queue_.clear();
  return true;
}

}  // namespace p3c
