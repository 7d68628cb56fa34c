#pragma once

#include <cstddef>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

class Cotree {
 public:
  enum class Kind { leaf, union_node, join_node };
  struct Node {
    Kind kind;
    Vertex vertex;  // leaves only; -1 otherwise
    std::vector<std::size_t> children;
  };

  std::size_t add_leaf(Vertex v);
  // Internal nodes need at least two children.
  std::size_t add_node(Kind kind, std::vector<std::size_t> children);
  void set_root(std::size_t id) { root_ = id; }

  std::size_t root() const noexcept { return root_; }
  const Node& node(std::size_t id) const { return nodes_.at(id); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::vector<Vertex> leaves(std::size_t id) const;  // sorted

  // Structural checks: every vertex 0..n-1 appears once as a leaf, arities >= 2.
  void validate(Vertex n) const;
  Graph evaluate(Vertex n) const;

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
};

// Throws NotCographError with an induced P4 when g is not a cograph.
Cotree build_cotree(const Graph& g);
bool is_cograph(const Graph& g);

struct CographSolution {
  int value = 0;
  VertexSet witness;
};

CographSolution beta_c_cograph(const Cotree& t);

}  // namespace p3c
