#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "p3c/graph.hpp"
#include "p3c/oracle.hpp"

namespace p3c {

struct DiagramComponent {
  std::array<Vertex, 2> vertices{-1, -1};
  int count = 0;
  Vertex min_top = 0, max_top = 0, min_bottom = 0, max_bottom = 0;

  static DiagramComponent single(const PermutationDiagram& d, Vertex v);
  static DiagramComponent pair(const PermutationDiagram& d, Vertex u, Vertex v);
  bool contains(Vertex v) const { return vertices[0] == v || (count == 2 && vertices[1] == v); }
  std::span<const Vertex> members() const { return {vertices.data(), static_cast<std::size_t>(count)}; }
  auto operator<=>(const DiagramComponent&) const = default;
};

struct Border {
  Vertex top = 0;
  Vertex bottom = 0;
  auto operator<=>(const Border&) const = default;
};

// N(L) splits by where a neighbour's segment leaves L's span: past L on the top line
// (and before it on the bottom line) or the other way round.
enum class Side : std::uint8_t { top, bottom };

struct SingleWitness {
  Side side;
  int need;  // pushes still missing relative to sigma(S - u)
  Vertex y;
  std::vector<Vertex> support;  // sigma(S - u) restricted to the part right of L's left edge
  auto operator<=>(const SingleWitness&) const = default;
};

struct PairWitness {
  Side side1;
  int need1;
  Side side2;
  int need2;
  Vertex y1, y2;
  std::vector<Vertex> support;
  auto operator<=>(const PairWitness&) const = default;
};

/// Vertices of N(L) on which partial 2-paths from some u in S end. For each class only the
/// entry reaching furthest right is kept. Paths from S \ L and from L itself are kept apart.
struct WitnessTriple {
  std::vector<SingleWitness> singles;
  std::vector<PairWitness> pairs;
  std::vector<SingleWitness> last_singles;
  std::vector<PairWitness> last_pairs;

  std::optional<Vertex> y_single() const;
  std::optional<Edge> y_pair() const;
  bool empty() const {
    return singles.empty() && pairs.empty() && last_singles.empty() && last_pairs.empty();
  }
  auto operator<=>(const WitnessTriple&) const = default;
};

struct DpState {
  std::size_t last_index = 0;  // into enumerate_components()
  DiagramComponent last;
  Border border;
  WitnessTriple witnesses;
  std::size_t best_size = 0;
  VertexSet representative;
  VertexSet hull;  // sigma(representative)
};

enum class DpMode { state, witness, oracle_check };

std::vector<DiagramComponent> enumerate_components(const PermutationDiagram& d);
bool is_right_of(const DiagramComponent& x, const DiagramComponent& l);
bool left_of_border(const PermutationDiagram& d, Vertex v, Border b);
Border compute_border(const PermutationDiagram& d, const VertexSet& hull);
bool membership_by_border(const PermutationDiagram& d, Vertex v, const DiagramComponent& last, Border b);

WitnessTriple witness_triple(const PermutationDiagram& d, const Graph& g, const VertexSet& s,
                             const DiagramComponent& last);

DpState initial_state(const PermutationDiagram& d, const Graph& g,
                      const std::vector<DiagramComponent>& comps, std::size_t index);
bool feasible_new_component(const PermutationDiagram& d, const Graph& g, const DpState& state,
                            const DiagramComponent& x);
// Check (a): decided from the state's witnesses plus explicit checks on X and on `last`.
bool state_mode_accepts(const PermutationDiagram& d, const Graph& g, const DpState& state,
                        const DiagramComponent& x);
std::optional<DpState> extend_state(const PermutationDiagram& d, const Graph& g,
                                    const DpState& state, std::size_t x_index,
                                    const std::vector<DiagramComponent>& comps, DpMode mode);

struct PermutationOptions {
  Vertex oracle_bound = kDefaultOracleBound;  // oracle_check only
};

struct PermutationResult {
  std::int64_t value = 0;
  VertexSet witness;
  std::uint64_t explored = 0;  // transitions examined
  std::size_t states = 0;
  std::size_t mode_disagreements = 0;
};

PermutationResult beta_c_permutation(const PermutationDiagram& d, DpMode mode,
                                     const PermutationOptions& options = {});

}  // namespace p3c
