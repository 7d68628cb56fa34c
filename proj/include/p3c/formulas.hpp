#pragma once

#include <utility>
#include <vector>

#include "p3c/graph.hpp"

namespace p3c {

int beta_c_path(int n);
int beta_c_cycle(int n);

// Maximum sets realising the closed forms on an actual path / cycle graph.
VertexSet path_witness(const Graph& path);
VertexSet cycle_witness(const Graph& cycle);

bool is_leafy(const Graph& t);
int beta_c_leafy(const Graph& t);

struct TreeDecomposition {
  std::vector<VertexSet> leafy_trees;
  std::vector<std::vector<Vertex>> paths;
  // Per path: whether its front / back endpoint belongs to one of the leafy trees.
  std::vector<std::pair<bool, bool>> shared;
};

TreeDecomposition tree_decompose(const Graph& t);

struct TreeSolution {
  int value = 0;
  VertexSet witness;
};

TreeSolution beta_c_tree(const Graph& t);

}  // namespace p3c
