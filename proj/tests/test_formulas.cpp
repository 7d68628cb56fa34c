#include <random>

#include "doctest.h"
#include "p3c/convexity.hpp"
#include "p3c/formulas.hpp"
#include "p3c/generators.hpp"
#include "p3c/oracle.hpp"
#include "support.hpp"

using namespace p3c;

namespace {

int leaf_count(const Graph& t, const VertexSet& f) {
  if (f.size() == 1) return 1;
  int leaves = 0;
  for (Vertex v : f) {
    int d = 0;
    for (Vertex w : t.neighbors(v)) d += f.contains(w);
    leaves += d == 1;
  }
  return leaves;
}

void check_decomposition(const Graph& t, const TreeDecomposition& dec) {
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<int> in_tree(n, -1);
  for (std::size_t i = 0; i < dec.leafy_trees.size(); ++i) {
    const auto& f = dec.leafy_trees[i];
    CHECK(is_tree(t.induced(f)));
    int deg2 = 0;
    for (Vertex v : f) {
      CHECK(in_tree[static_cast<std::size_t>(v)] == -1);  // disjoint
      in_tree[static_cast<std::size_t>(v)] = static_cast<int>(i);
      int d = 0;
      for (Vertex w : t.neighbors(v)) d += f.contains(w);
      deg2 += d == 2;
    }
    CHECK(deg2 <= 1);
  }
  REQUIRE(dec.paths.size() == dec.shared.size());
  std::vector<int> interior(n, 0);
  std::vector<bool> covered(n, false);
  for (std::size_t v = 0; v < n; ++v) covered[v] = in_tree[v] >= 0;
  for (std::size_t j = 0; j < dec.paths.size(); ++j) {
    const auto& p = dec.paths[j];
    REQUIRE(p.size() >= 2);
    CHECK(is_path(t.induced(VertexSet(p))));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(t.adjacent(p[i], p[i + 1]));
    for (std::size_t i = 0; i < p.size(); ++i) {
      covered[static_cast<std::size_t>(p[i])] = true;
      if (i == 0 || i + 1 == p.size()) continue;
      CHECK(in_tree[static_cast<std::size_t>(p[i])] == -1);
      ++interior[static_cast<std::size_t>(p[i])];
    }
    CHECK(dec.shared[j].first == (in_tree[static_cast<std::size_t>(p.front())] >= 0));
    CHECK(dec.shared[j].second == (in_tree[static_cast<std::size_t>(p.back())] >= 0));
  }
  for (std::size_t v = 0; v < n; ++v) {
    CHECK(covered[v]);
    CHECK(interior[v] <= 1);
  }
}

}  // namespace

TEST_CASE("closed forms") {
  CHECK(beta_c_path(6) == 4);
  CHECK(beta_c_path(1) == 1);
  CHECK(beta_c_path(7) == 5);
  CHECK(beta_c_cycle(4) == 2);
  CHECK(beta_c_cycle(3) == 2);
  CHECK(beta_c_cycle(10) == 6);
  CHECK_THROWS_AS(beta_c_path(0), Error);
  CHECK_THROWS_AS(beta_c_cycle(2), Error);
  CHECK(is_convexly_independent(gen_path(7), {0, 1, 3, 4, 6}).independent);
  for (int n = 1; n <= 14; ++n) {
    CHECK(beta_c_path(n) == ref::beta_c(gen_path(n)));
    auto w = path_witness(gen_path(n));
    CHECK(static_cast<int>(w.size()) == beta_c_path(n));
    CHECK(is_convexly_independent(gen_path(n), w).independent);
  }
  for (int n = 3; n <= 14; ++n) {
    CHECK(beta_c_cycle(n) == ref::beta_c(gen_cycle(n)));
    auto w = cycle_witness(gen_cycle(n));
    CHECK(static_cast<int>(w.size()) == beta_c_cycle(n));
    CHECK(is_convexly_independent(gen_cycle(n), w).independent);
  }
}

TEST_CASE("witnesses follow the actual vertex order") {
  // path 0-3-1-4-2 given with shuffled labels
  Graph g(5, std::vector<Edge>{{0, 3}, {3, 1}, {1, 4}, {4, 2}});
  auto w = path_witness(g);
  CHECK(w.size() == 4);
  CHECK(is_convexly_independent(g, w).independent);
  Graph c(6, std::vector<Edge>{{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  auto cw = cycle_witness(c);
  CHECK(cw.size() == 4);
  CHECK(is_convexly_independent(c, cw).independent);
}

TEST_CASE("leafy trees") {
  CHECK(is_leafy(gen_star(3)));
  CHECK(beta_c_leafy(gen_star(3)) == 3);
  CHECK_FALSE(is_leafy(gen_path(5)));
  CHECK_THROWS_AS(beta_c_leafy(gen_path(5)), Error);
  Graph sample = parse_edge_list(ref::kSampleTree);
  CHECK(is_leafy(sample));
  CHECK(beta_c_leafy(sample) == 3);
  CHECK(beta_c_leafy(Graph(1)) == 1);
  CHECK_THROWS_AS(is_leafy(gen_cycle(4)), Error);
  for (int n = 1; n <= 10; ++n)
    for (const auto& t : all_trees(n))
      if (is_leafy(t)) CHECK(beta_c_leafy(t) == beta_c_oracle(t).value);
}

TEST_CASE("tree decomposition") {
  SUBCASE("paths have no leafy part") {
    auto d = tree_decompose(gen_path(6));
    CHECK(d.leafy_trees.empty());
    REQUIRE(d.paths.size() == 1);
    CHECK(d.paths[0].size() == 6);
  }
  SUBCASE("a star is one leafy tree") {
    auto d = tree_decompose(gen_star(3));
    REQUIRE(d.leafy_trees.size() == 1);
    CHECK(d.leafy_trees[0] == VertexSet::range(4));
    CHECK(d.paths.empty());
  }
  SUBCASE("spider with three legs of two") {
    Graph t = gen_spider(3, 2);  // centre 0, legs 1-2, 3-4, 5-6
    auto d = tree_decompose(t);
    REQUIRE(d.leafy_trees.size() == 1);
    CHECK(d.leafy_trees[0] == VertexSet{0, 1, 2, 3, 5});
    REQUIRE(d.paths.size() == 2);
    CHECK(d.paths[0] == std::vector<Vertex>{3, 4});
    CHECK(d.paths[1] == std::vector<Vertex>{5, 6});
    CHECK(d.shared[0] == std::pair{true, false});
    CHECK(d.shared[1] == std::pair{true, false});
    // leaves of the leafy tree plus each path's share outside it
    int combined = leaf_count(t, d.leafy_trees[0]);
    for (std::size_t j = 0; j < d.paths.size(); ++j)
      combined += beta_c_path(static_cast<int>(d.paths[j].size())) - d.shared[j].first - d.shared[j].second;
    CHECK(combined == 5);
    CHECK(beta_c_oracle(t).value == 5);
  }
  SUBCASE("structural invariants on all small trees") {
    for (int n = 1; n <= 11; ++n)
      for (const auto& t : all_trees(n)) check_decomposition(t, tree_decompose(t));
  }
  CHECK_THROWS_AS(tree_decompose(gen_cycle(5)), Error);
}

TEST_CASE("tree solver matches the oracle") {
  CHECK(beta_c_tree(gen_spider(3, 2)).value == 5);
  CHECK_THROWS_AS(beta_c_tree(gen_cycle(4)), Error);
  for (int n = 1; n <= 11; ++n)
    for (const auto& t : all_trees(n)) {
      auto r = beta_c_tree(t);
      CHECK(r.value == beta_c_oracle(t).value);
      CHECK(static_cast<int>(r.witness.size()) == r.value);
      CHECK(is_convexly_independent(t, r.witness).independent);
    }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Graph t = gen_random_tree(12 + static_cast<Vertex>(seed % 5), seed);
    auto r = beta_c_tree(t);
    CHECK(r.value == beta_c_oracle(t).value);
    CHECK(is_convexly_independent(t, r.witness).independent);
  }
  // large inputs stay fast and self-consistent
  Graph big = gen_random_tree(5000, 1);
  auto r = beta_c_tree(big);
  CHECK(static_cast<int>(r.witness.size()) == r.value);
  CHECK(is_convexly_independent(big, r.witness).independent);
}

TEST_CASE("the counterexample trees to the leaf-and-path rule") {
  // branch vertex with two leaves and a pendant chain of length 4
  Graph a(7, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(beta_c_tree(a).value == ref::beta_c(a));
  CHECK(beta_c_tree(a).value == 5);
  // spider with legs 1, 1, 5
  Graph b(8, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  CHECK(beta_c_tree(b).value == ref::beta_c(b));
}
