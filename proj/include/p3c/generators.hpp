#pragma once

#include <cstdint>
#include <vector>

#include "p3c/cograph.hpp"
#include "p3c/graph.hpp"

namespace p3c {

Graph gen_path(Vertex n);
Graph gen_cycle(Vertex n);
Graph gen_star(Vertex leaves);
Graph gen_spider(int legs, int leg_length);

struct Ladder {
  Graph graph;
  PermutationDiagram diagram;
  std::vector<Vertex> top_rail;     // t_1..t_k
  std::vector<Vertex> bottom_rail;  // b_1..b_k
};
Ladder gen_ladder(int k);

// Marked irredundant set of the ladder with k rungs.
VertexSet ladder_marked_set(const Ladder& ladder);

PermutationDiagram gen_random_permutation(Vertex n, std::uint64_t seed);

struct RandomCograph {
  Graph graph;
  Cotree cotree;
};
RandomCograph gen_random_cograph(Vertex n, std::uint64_t seed);
Graph gen_random_tree(Vertex n, std::uint64_t seed);
Graph gen_random_graph(Vertex n, double p, std::uint64_t seed);

// One representative per isomorphism class of trees on n vertices.
std::vector<Graph> all_trees(Vertex n);

}  // namespace p3c
