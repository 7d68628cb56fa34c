#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

struct HullTrace {
  VertexSet hull;
  std::vector<Vertex> order;  // seeds first (ascending), then additions
  // Indexed by vertex; (-1, -1) for seeds and non-members.
  std::vector<std::pair<Vertex, Vertex>> parents;

  bool contains(Vertex v) const { return hull.contains(v); }
  std::optional<std::pair<Vertex, Vertex>> parents_of(Vertex v) const;
};

enum class QueueOrder { forward, reverse, shuffled };

HullTrace hull(const Graph& g, const VertexSet& a, QueueOrder order = QueueOrder::forward,
               std::uint64_t seed = 0);
VertexSet hull_set(const Graph& g, const VertexSet& a);
bool is_convex(const Graph& g, const VertexSet& w);

std::optional<std::vector<Vertex>> two_path_certificate(const Graph& g, const VertexSet& s, Vertex x);

struct IndependenceVerdict {
  bool independent = true;
  std::optional<Vertex> violator;
  std::optional<HullTrace> certificate;  // trace of hull(s - violator)
};

IndependenceVerdict is_convexly_independent(const Graph& g, const VertexSet& s);
bool is_two_packing(const Graph& g, const VertexSet& s);

/// Reusable scratch space for repeated closures on one graph.
/// Vertices become active on reaching two active neighbours.
class Closure {
 public:
  explicit Closure(const Graph& g);

  void reset();
  // Activates v and propagates. Returns false if `stop` became active (when stop >= 0).
  bool add(Vertex v, Vertex stop = -1);
  bool add_all(std::span<const Vertex> vs, Vertex stop = -1);
  bool active(Vertex v) const { return active_[static_cast<std::size_t>(v)] != 0; }
  int count(Vertex v) const { return count_[static_cast<std::size_t>(v)]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  // Snapshot support so closures can branch from a common base.
  struct Snapshot {
    std::vector<std::uint8_t> active;
    std::vector<std::uint8_t> count;
    std::vector<Vertex> members;
  };
  Snapshot save() const { return {active_, count_, members_}; }
  void restore(const Snapshot& s);

 private:
  bool propagate(Vertex stop);

  const Graph* g_;
  std::vector<std::uint8_t> active_;
  std::vector<std::uint8_t> count_;  // saturates at 2
  std::vector<Vertex> members_;
  std::vector<Vertex> queue_;
};

}  // namespace p3c
