#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p3c/error.hpp"

namespace p3c {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted list of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  // Sorts and removes duplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex n);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const std::vector<Vertex>& values() const noexcept { return ids_; }

  VertexSet with(Vertex v) const;
  VertexSet without(Vertex v) const;
  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool subset_of(const VertexSet& other) const;

  // Throws invalid_set unless every id lies in [0, n).
  void check_range(Vertex n) const;

  bool operator==(const VertexSet&) const = default;
  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> ids_;
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);
  // Duplicate edges are merged; loops and out-of-range ids throw argument errors.
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept { return static_cast<Vertex>(adj_.size()); }
  std::size_t size() const noexcept { return m_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  Graph induced(const VertexSet& keep) const;  // relabels keep[i] -> i

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Segments between two lines: vertex v runs from top position v to bottom position bottom(v).
/// Positions are 0-based here and 1-based in text.
class PermutationDiagram {
 public:
  PermutationDiagram() = default;
  explicit PermutationDiagram(std::vector<Vertex> bottom);

  Vertex size() const noexcept { return static_cast<Vertex>(bottom_.size()); }
  Vertex top(Vertex v) const noexcept { return v; }
  Vertex bottom(Vertex v) const { return bottom_[static_cast<std::size_t>(v)]; }
  Vertex at_bottom(Vertex pos) const { return inverse_[static_cast<std::size_t>(pos)]; }
  bool crosses(Vertex u, Vertex v) const {
    return (u - v) * (bottom(u) - bottom(v)) < 0;
  }
  const std::vector<Vertex>& bottoms() const noexcept { return bottom_; }

  bool operator==(const PermutationDiagram& o) const { return bottom_ == o.bottom_; }

 private:
  std::vector<Vertex> bottom_;
  std::vector<Vertex> inverse_;
};

Graph diagram_to_graph(const PermutationDiagram& d);

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
PermutationDiagram parse_permutation(std::istream& in);
PermutationDiagram parse_permutation(std::string_view text);
std::string format_edge_list(const Graph& g);
std::string format_permutation(const PermutationDiagram& d);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);
bool is_cycle(const Graph& g);
// Vertices along the path / around the cycle, starting at the smallest end / smallest id.
std::vector<Vertex> path_order(const Graph& g);
std::vector<Vertex> cycle_order(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

enum class GraphClass { path, cycle, tree, cograph, permutation_input, generic };

std::string_view to_string(GraphClass c);
GraphClass classify(const Graph& g, bool has_diagram);

}  // namespace p3c
