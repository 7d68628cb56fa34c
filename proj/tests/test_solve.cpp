#include <filesystem>
#include <random>

#include "doctest.h"
#include "p3c/convexity.hpp"
#include "p3c/generators.hpp"
#include "p3c/solve.hpp"
#include "p3c/validate.hpp"
#include "support.hpp"

using namespace p3c;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::argument;
}

SolveOptions with(Solver s, DpMode m = DpMode::witness) {
  SolveOptions o;
  o.solver = s;
  o.mode = m;
  return o;
}

}  // namespace

TEST_CASE("solver names") {
  for (Solver s : {Solver::automatic, Solver::oracle, Solver::path, Solver::cycle, Solver::tree, Solver::cograph,
                   Solver::permutation})
    CHECK(solver_from_string(to_string(s)) == s);
  CHECK_FALSE(solver_from_string("magic"));
}

TEST_CASE("automatic dispatch") {
  CHECK(solve_beta_c(gen_path(6), nullptr, {}).solver == Solver::path);
  CHECK(solve_beta_c(gen_path(6), nullptr, {}).value == 4);
  CHECK(solve_beta_c(gen_cycle(7), nullptr, {}).solver == Solver::cycle);
  auto star = solve_beta_c(gen_star(3), nullptr, {});
  CHECK(star.solver == Solver::tree);
  CHECK(star.value == 3);
  CHECK(solve_beta_c(build_cotree(gen_cycle(4)).evaluate(4), nullptr, {}).value == 2);
  auto l = gen_ladder(5);
  auto perm = solve_beta_c(l.graph, &l.diagram, {});
  CHECK(perm.solver == Solver::permutation);
  CHECK(perm.value == ref::beta_c(l.graph));
  CHECK(solve_beta_c(l.graph, nullptr, {}).solver == Solver::oracle);
  CHECK(solve_beta_c(Graph(0), nullptr, {}).value == 0);
}

TEST_CASE("disconnected generic graphs are solved per component") {
  Graph big = disjoint_union(gen_ladder(12).graph, gen_ladder(12).graph);  // 48 vertices: too big for the oracle alone
  CHECK(code_of([&] { solve_beta_c(big, nullptr, with(Solver::oracle)); }) == ErrorCode::size_refusal);
  Graph two = disjoint_union(gen_ladder(5).graph, gen_cycle(5));
  auto r = solve_beta_c(two, nullptr, {});
  CHECK(r.value == ref::beta_c(gen_ladder(5).graph) + 3);
  CHECK(is_convexly_independent(two, r.witness).independent);
}

TEST_CASE("explicit solvers must fit the input") {
  CHECK(code_of([] { solve_beta_c(gen_path(6), nullptr, with(Solver::cycle)); }) == ErrorCode::dispatch);
  CHECK(code_of([] { solve_beta_c(gen_cycle(6), nullptr, with(Solver::tree)); }) == ErrorCode::dispatch);
  CHECK(code_of([] { solve_beta_c(gen_path(6), nullptr, with(Solver::cograph)); }) == ErrorCode::dispatch);
  CHECK(code_of([] { solve_beta_c(gen_path(6), nullptr, with(Solver::permutation)); }) == ErrorCode::dispatch);
  CHECK(code_of([] { solve_beta_c(gen_path(25), nullptr, with(Solver::oracle)); }) == ErrorCode::size_refusal);
  // a path is also a tree and (for n <= 3) a cograph
  CHECK(solve_beta_c(gen_path(6), nullptr, with(Solver::tree)).value == 4);
  CHECK(solve_beta_c(gen_path(3), nullptr, with(Solver::cograph)).value == 2);
  auto d = parse_permutation("3 1 4 5 2");
  Graph g = diagram_to_graph(d);
  CHECK(solve_beta_c(g, &d, with(Solver::permutation)).value == 3);
  PermutationDiagram wrong({0, 1});
  CHECK(code_of([&] { solve_beta_c(g, &wrong, {}); }) == ErrorCode::argument);
}

TEST_CASE("oracle-check mode compares every solver with the oracle") {
  for (Solver s : {Solver::path, Solver::tree}) CHECK(solve_beta_c(gen_path(9), nullptr, with(s, DpMode::oracle_check)).value == 6);
  CHECK(solve_beta_c(gen_cycle(9), nullptr, with(Solver::cycle, DpMode::oracle_check)).value == 6);
  auto c = gen_random_cograph(12, 4);
  CHECK(solve_beta_c(c.graph, nullptr, with(Solver::cograph, DpMode::oracle_check)).value == ref::beta_c(c.graph));
  auto d = gen_random_permutation(12, 4);
  CHECK(solve_beta_c(diagram_to_graph(d), &d, with(Solver::permutation, DpMode::oracle_check)).value ==
        ref::beta_c(diagram_to_graph(d)));
}

TEST_CASE("validation suites") {
  auto dir = std::filesystem::temp_directory_path() / "p3c-validate-test";
  std::filesystem::create_directories(dir);
  for (const auto& name : validation_suites()) {
    ValidateOptions o;
    o.suite = name;
    o.max_n = name == "permutation" ? 6 : 8;
    o.samples = 20;
    o.threads = 2;
    o.fixture_dir = dir;
    auto r = run_validation(o);
    INFO(name);
    CHECK(r.total > 0);
    CHECK(r.passed == r.total);
    CHECK(r.failures.empty());
    CHECK(r.fixture_files.empty());
    CHECK(r.summary() == std::to_string(r.total) + "/" + std::to_string(r.total) + " ok");
  }
  ValidateOptions seven;
  seven.suite = "permutation";
  seven.max_n = 7;
  CHECK(run_validation(seven).summary() == "5040/5040 ok");
  ValidateOptions bad;
  bad.suite = "nonsense";
  CHECK(code_of([&] { run_validation(bad); }) == ErrorCode::dispatch);
  std::filesystem::remove_all(dir);
}

TEST_CASE("validation is deterministic in the seed") {
  ValidateOptions o;
  o.suite = "tree";
  o.max_n = 9;
  o.samples = 30;
  o.seed = 12345;
  auto a = run_validation(o);
  o.threads = 1;
  auto b = run_validation(o);
  CHECK(a.total == b.total);
  CHECK(a.passed == b.passed);
}
