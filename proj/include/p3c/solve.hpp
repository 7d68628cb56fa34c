#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "p3c/graph.hpp"
#include "p3c/oracle.hpp"
#include "p3c/permutation.hpp"

namespace p3c {

enum class Solver { automatic, oracle, path, cycle, tree, cograph, permutation };

std::string_view to_string(Solver s);
std::optional<Solver> solver_from_string(std::string_view name);

struct SolveOptions {
  Solver solver = Solver::automatic;
  DpMode mode = DpMode::witness;
  Vertex oracle_bound = kDefaultOracleBound;
};

struct Solution {
  std::int64_t value = 0;
  VertexSet witness;
  Solver solver = Solver::automatic;  // the solver that actually ran
  std::uint64_t explored = 0;
};

/// Dispatches to a solver and re-verifies the witness before returning.
/// A mismatched explicit solver throws a dispatch error.
Solution solve_beta_c(const Graph& g, const PermutationDiagram* diagram, const SolveOptions& options);

}  // namespace p3c
