#include "p3c/solve.hpp"

#include "p3c/cograph.hpp"
#include "p3c/convexity.hpp"
#include "p3c/formulas.hpp"

namespace p3c {

std::string_view to_string(Solver s) {
  switch (s) {
    case Solver::automatic: return "auto";
    case Solver::oracle: return "oracle";
    case Solver::path: return "path";
    case Solver::cycle: return "cycle";
    case Solver::tree: return "tree";
    case Solver::cograph: return "cograph";
    case Solver::permutation: return "permutation";
  }
  return "auto";
}

std::optional<Solver> solver_from_string(std::string_view name) {
  for (Solver s : {Solver::automatic, Solver::oracle, Solver::path, Solver::cycle, Solver::tree,
                   Solver::cograph, Solver::permutation})
    if (to_string(s) == name) return s;
  return std::nullopt;
}

namespace {

[[noreturn]] void mismatch(Solver s, std::string_view why) {
  throw Error(ErrorCode::dispatch, "solver '" + std::string(to_string(s)) + "' does not apply: " + std::string(why));
}

Solution run(const Graph& g, const PermutationDiagram* diagram, Solver solver, const SolveOptions& o) {
  Solution sol;
  sol.solver = solver;
  switch (solver) {
    case Solver::oracle: {
      auto r = beta_c_oracle(g, {o.oracle_bound, std::nullopt});
      sol.value = r.value;
      sol.witness = r.witness;
      sol.explored = r.explored;
      break;
    }
    case Solver::path:
      if (g.order() < 1 || !is_path(g)) mismatch(solver, "input is not a path");
      sol.value = beta_c_path(g.order());
      sol.witness = path_witness(g);
      break;
    case Solver::cycle:
      if (!is_cycle(g)) mismatch(solver, "input is not a cycle");
      sol.value = beta_c_cycle(g.order());
      sol.witness = cycle_witness(g);
      break;
    case Solver::tree: {
      if (!is_tree(g)) mismatch(solver, "input is not a tree");
      auto r = beta_c_tree(g);
      sol.value = r.value;
      sol.witness = r.witness;
      break;
    }
    case Solver::cograph: {
      if (g.order() < 1) mismatch(solver, "empty graph");
      Cotree t;
      try {
        t = build_cotree(g);
      } catch (const NotCographError& e) {
        mismatch(solver, "input is not a cograph");
      }
      auto r = beta_c_cograph(t);
      sol.value = r.value;
      sol.witness = r.witness;
      break;
    }
    case Solver::permutation: {
      if (!diagram) mismatch(solver, "a permutation diagram is required");
      PermutationOptions po;
      po.oracle_bound = o.oracle_bound;
      auto r = beta_c_permutation(*diagram, o.mode, po);
      if (r.mode_disagreements)
        throw Error(ErrorCode::verification,
                    std::to_string(r.mode_disagreements) + " transitions where state and witness checks disagree");
      sol.value = r.value;
      sol.witness = r.witness;
      sol.explored = r.explored;
      break;
    }
    case Solver::automatic:
      break;
  }
  return sol;
}

Solver pick(const Graph& g, bool has_diagram) {
  switch (classify(g, has_diagram)) {
    case GraphClass::path: return Solver::path;
    case GraphClass::cycle: return Solver::cycle;
    case GraphClass::tree: return Solver::tree;
    case GraphClass::cograph: return Solver::cograph;
    case GraphClass::permutation_input: return Solver::permutation;
    case GraphClass::generic: return Solver::oracle;
  }
  return Solver::oracle;
}

}  // namespace

Solution solve_beta_c(const Graph& g, const PermutationDiagram* diagram, const SolveOptions& options) {
  if (diagram && diagram->size() != g.order()) throw Error(ErrorCode::argument, "diagram and graph sizes differ");
  Solution sol;
  if (options.solver != Solver::automatic) {
    sol = run(g, diagram, options.solver, options);
  } else if (g.order() == 0) {
    sol.solver = Solver::oracle;
  } else {
    Solver s = pick(g, diagram != nullptr);
    auto parts = components(g);
    if (s == Solver::oracle && parts.size() > 1) {
      // beta_c adds up over components; solve each one on its own.
      sol.solver = Solver::automatic;
      for (const auto& part : parts) {
        Graph sub = g.induced(part);
        Solution one = run(sub, nullptr, pick(sub, false), options);
        sol.value += one.value;
        sol.explored += one.explored;
        std::vector<Vertex> w(sol.witness.values());
        for (Vertex v : one.witness) w.push_back(part[static_cast<std::size_t>(v)]);
        sol.witness = VertexSet(std::move(w));
      }
    } else {
      sol = run(g, diagram, s, options);
    }
  }
  if (static_cast<std::int64_t>(sol.witness.size()) != sol.value || !is_convexly_independent(g, sol.witness).independent)
    throw Error(ErrorCode::verification, "solver witness failed re-verification");
  // The permutation DP does its own oracle comparison in this mode.
  if (options.mode == DpMode::oracle_check && sol.solver != Solver::oracle && sol.solver != Solver::permutation) {
    auto truth = beta_c_oracle(g, {options.oracle_bound, std::nullopt});
    if (truth.value != sol.value)
      throw Error(ErrorCode::verification, "solver value " + std::to_string(sol.value) + " differs from oracle value " +
                                               std::to_string(truth.value));
  }
  return sol;
}

}  // namespace p3c
