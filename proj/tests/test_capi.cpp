// Exercises the shared library through its C header only.
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "p3c/p3c.h"

namespace {

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using Graph = std::unique_ptr<p3c_graph, Deleter<p3c_graph, p3c_graph_free>>;
using List = std::unique_ptr<p3c_list, Deleter<p3c_list, p3c_list_free>>;
using Hull = std::unique_ptr<p3c_hull, Deleter<p3c_hull, p3c_hull_free>>;
using Verdict = std::unique_ptr<p3c_verdict, Deleter<p3c_verdict, p3c_verdict_free>>;
using Solution = std::unique_ptr<p3c_solution, Deleter<p3c_solution, p3c_solution_free>>;
using Validation = std::unique_ptr<p3c_validation, Deleter<p3c_validation, p3c_validation_free>>;

Graph parse(const char* text, p3c_format f) {
  p3c_graph* g = nullptr;
  REQUIRE(p3c_graph_parse(text, f, &g) == P3C_OK);
  return Graph(g);
}

Graph generate(const char* kind, std::vector<int64_t> params, uint64_t seed = 1) {
  p3c_graph* g = nullptr;
  REQUIRE(p3c_generate(kind, params.data(), params.size(), seed, &g) == P3C_OK);
  return Graph(g);
}

std::vector<int32_t> items(const p3c_list* l) {
  return {p3c_list_data(l), p3c_list_data(l) + p3c_list_size(l)};
}

std::vector<int32_t> items(const int32_t* p, size_t n) { return {p, p + n}; }

Solution solve(const p3c_graph* g, p3c_solver s = P3C_SOLVER_AUTO, p3c_mode m = P3C_MODE_WITNESS) {
  p3c_solve_options o = p3c_solve_options_default();
  o.solver = s;
  o.mode = m;
  p3c_solution* out = nullptr;
  REQUIRE(p3c_beta_c(g, &o, &out) == P3C_OK);
  return Solution(out);
}

const char* kSample = "3 1 4 5 2";

}  // namespace

TEST_CASE("version and names") {
  CHECK(std::string(p3c_version()) == "1.0.0");
  CHECK(std::string(p3c_status_name(P3C_OK)) == "ok");
  CHECK(std::string(p3c_status_name(P3C_ERR_SIZE_REFUSAL)).size() > 0);
  CHECK(std::string(p3c_class_name(P3C_CLASS_TREE)) == "tree");
  p3c_solver s;
  for (int i = P3C_SOLVER_AUTO; i <= P3C_SOLVER_PERMUTATION; ++i) {
    REQUIRE(p3c_solver_from_name(p3c_solver_name(static_cast<p3c_solver>(i)), &s) == P3C_OK);
    CHECK(s == i);
  }
  CHECK(p3c_solver_from_name("nope", &s) == P3C_ERR_ARGUMENT);
}

TEST_CASE("parsing and errors") {
  auto g = parse("5 4\n1 2\n1 5\n3 5\n4 5\n", P3C_FORMAT_EDGE_LIST);
  CHECK(p3c_graph_order(g.get()) == 5);
  CHECK(p3c_graph_size(g.get()) == 4);
  CHECK_FALSE(p3c_graph_has_diagram(g.get()));
  p3c_list* l = nullptr;
  CHECK(p3c_graph_diagram(g.get(), &l) == P3C_ERR_ARGUMENT);

  p3c_graph* bad = nullptr;
  CHECK(p3c_graph_parse("3 1\n1 9\n", P3C_FORMAT_EDGE_LIST, &bad) == P3C_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(std::strlen(p3c_last_error()) > 0);
  CHECK(p3c_graph_parse("1 2 2", P3C_FORMAT_PERMUTATION, &bad) == P3C_ERR_PARSE);
  CHECK(p3c_graph_parse(nullptr, P3C_FORMAT_EDGE_LIST, &bad) == P3C_ERR_ARGUMENT);
  CHECK(p3c_graph_parse("1 0\n", P3C_FORMAT_EDGE_LIST, nullptr) == P3C_ERR_ARGUMENT);
  CHECK(p3c_generate("hypercube", nullptr, 0, 1, &bad) == P3C_ERR_DISPATCH);
  CHECK(p3c_graph_order(nullptr) == 0);

  int32_t edges[] = {0, 1, 1, 2};
  p3c_graph* made = nullptr;
  REQUIRE(p3c_graph_create(3, edges, 2, &made) == P3C_OK);
  Graph owned(made);
  CHECK(items(std::unique_ptr<p3c_list, Deleter<p3c_list, p3c_list_free>>([&] {
          p3c_list* e = nullptr;
          REQUIRE(p3c_graph_edges(owned.get(), &e) == P3C_OK);
          return e;
        }()).get()) == std::vector<int32_t>{0, 1, 1, 2});
  int32_t loop[] = {1, 1};
  CHECK(p3c_graph_create(3, loop, 1, &bad) == P3C_ERR_ARGUMENT);
  int32_t dup[] = {0, 0};
  CHECK(p3c_graph_from_permutation(dup, 2, &bad) == P3C_ERR_ARGUMENT);
}

TEST_CASE("permutation input and round trips") {
  auto g = parse(kSample, P3C_FORMAT_PERMUTATION);
  CHECK(p3c_graph_order(g.get()) == 5);
  CHECK(p3c_graph_size(g.get()) == 4);
  REQUIRE(p3c_graph_has_diagram(g.get()));
  p3c_list* l = nullptr;
  REQUIRE(p3c_graph_diagram(g.get(), &l) == P3C_OK);
  List d(l);
  CHECK(items(d.get()) == std::vector<int32_t>{2, 0, 3, 4, 1});
  p3c_graph* again = nullptr;
  REQUIRE(p3c_graph_from_permutation(p3c_list_data(d.get()), 5, &again) == P3C_OK);
  Graph g2(again);
  CHECK(p3c_graph_size(g2.get()) == 4);

  char* text = nullptr;
  REQUIRE(p3c_graph_format(g.get(), P3C_FORMAT_PERMUTATION, &text) == P3C_OK);
  CHECK(std::string(text).find("3 1 4 5 2") == 0);
  p3c_string_free(text);
  REQUIRE(p3c_graph_format(g.get(), P3C_FORMAT_EDGE_LIST, &text) == P3C_OK);
  auto back = parse(text, P3C_FORMAT_EDGE_LIST);
  p3c_string_free(text);
  CHECK(p3c_graph_size(back.get()) == 4);

  auto path = generate("path", {4});
  CHECK(p3c_graph_format(path.get(), P3C_FORMAT_PERMUTATION, &text) == P3C_ERR_ARGUMENT);
  p3c_class c;
  REQUIRE(p3c_graph_classify(g.get(), &c) == P3C_OK);
  CHECK(c == P3C_CLASS_TREE);
  REQUIRE(p3c_graph_classify(generate("ladder", {4}).get(), &c) == P3C_OK);
  CHECK(c == P3C_CLASS_PERMUTATION_INPUT);
}

TEST_CASE("hull, check and boundary") {
  auto g = parse(kSample, P3C_FORMAT_PERMUTATION);
  int32_t s[] = {0, 1, 2};
  p3c_hull* h = nullptr;
  REQUIRE(p3c_hull_compute(g.get(), s, 3, &h) == P3C_OK);
  Hull hull(h);
  size_t n = 0;
  const int32_t* m = p3c_hull_members(hull.get(), &n);
  CHECK(items(m, n) == std::vector<int32_t>{0, 1, 2, 4});
  const int32_t* order = p3c_hull_order(hull.get(), &n);
  CHECK(items(order, n) == std::vector<int32_t>{0, 1, 2, 4});  // seeds first
  int32_t a = -1, b = -1;
  REQUIRE(p3c_hull_parents(hull.get(), 4, &a, &b));
  CHECK(((a == 1 && b == 2) || (a == 2 && b == 1) || (a == 0 && b == 1) || (a == 0 && b == 2)));
  CHECK_FALSE(p3c_hull_parents(hull.get(), 0, &a, &b));

  int32_t dep[] = {0, 1, 2, 3};
  p3c_verdict* v = nullptr;
  REQUIRE(p3c_check(g.get(), dep, 4, &v) == P3C_OK);
  Verdict verdict(v);
  CHECK_FALSE(p3c_verdict_independent(verdict.get()));
  CHECK(p3c_verdict_violator(verdict.get()) == 0);
  const int32_t* c = p3c_verdict_certificate(verdict.get(), &n);
  auto cert = items(c, n);
  REQUIRE_FALSE(cert.empty());
  CHECK(cert.back() == 0);

  int32_t ind[] = {1, 2, 3};
  REQUIRE(p3c_check(g.get(), ind, 3, &v) == P3C_OK);
  Verdict ok(v);
  CHECK(p3c_verdict_independent(ok.get()));
  CHECK(p3c_verdict_violator(ok.get()) == -1);

  int found = 0;
  p3c_list* p = nullptr;
  REQUIRE(p3c_two_path(g.get(), s, 3, 4, &found, &p) == P3C_OK);
  List tp(p);
  CHECK(found);
  CHECK(items(tp.get()).back() == 4);

  int convex = 1;
  REQUIRE(p3c_is_convex(g.get(), s, 3, &convex) == P3C_OK);
  CHECK_FALSE(convex);
  REQUIRE(p3c_is_convex(g.get(), m, 4, &convex) == P3C_OK);
  CHECK(convex);
  int packing = 0;
  int32_t far[] = {0, 3};
  REQUIRE(p3c_is_two_packing(g.get(), far, 2, &packing) == P3C_OK);
  CHECK(packing == 0);  // both adjacent to 4

  int32_t dupe[] = {1, 1};
  CHECK(p3c_check(g.get(), dupe, 2, &v) == P3C_ERR_INVALID_SET);
  int32_t out_of_range[] = {7};
  CHECK(p3c_hull_compute(g.get(), out_of_range, 1, &h) == P3C_ERR_INVALID_SET);
  CHECK(p3c_check(g.get(), nullptr, 2, &v) == P3C_ERR_ARGUMENT);

  auto p3 = generate("path", {3});
  int32_t ends[] = {0, 2};
  REQUIRE(p3c_boundary(p3.get(), ends, 2, &p) == P3C_OK);
  List bd(p);
  CHECK(items(bd.get()) == std::vector<int32_t>{1});
  int irr = 0;
  REQUIRE(p3c_is_irredundant(p3.get(), ends, 2, &irr) == P3C_OK);
  CHECK(irr);
  CHECK(p3c_boundary(p3.get(), ends, 0, &p) == P3C_ERR_ARGUMENT);
}

TEST_CASE("solving") {
  auto p6 = generate("path", {6});
  auto r = solve(p6.get());
  CHECK(p3c_solution_value(r.get()) == 4);
  CHECK(p3c_solution_solver(r.get()) == P3C_SOLVER_PATH);
  size_t n = 0;
  const int32_t* w = p3c_solution_witness(r.get(), &n);
  CHECK(n == 4);
  p3c_verdict* v = nullptr;
  REQUIRE(p3c_check(p6.get(), w, n, &v) == P3C_OK);
  CHECK(p3c_verdict_independent(v));
  p3c_verdict_free(v);

  auto fig = parse(kSample, P3C_FORMAT_PERMUTATION);
  for (auto mode : {P3C_MODE_STATE, P3C_MODE_WITNESS, P3C_MODE_ORACLE_CHECK})
    CHECK(p3c_solution_value(solve(fig.get(), P3C_SOLVER_PERMUTATION, mode).get()) == 3);
  CHECK(p3c_solution_value(solve(fig.get(), P3C_SOLVER_ORACLE).get()) == 3);
  CHECK(p3c_solution_value(solve(fig.get(), P3C_SOLVER_TREE).get()) == 3);

  auto c4 = generate("cycle", {4});
  CHECK(p3c_solution_value(solve(c4.get(), P3C_SOLVER_COGRAPH).get()) == 2);
  auto star = generate("star", {3});
  CHECK(p3c_solution_value(solve(star.get(), P3C_SOLVER_COGRAPH).get()) == 3);

  p3c_solution* out = nullptr;
  p3c_solve_options o = p3c_solve_options_default();
  o.solver = P3C_SOLVER_CYCLE;
  CHECK(p3c_beta_c(p6.get(), &o, &out) == P3C_ERR_DISPATCH);
  CHECK(out == nullptr);
  o.solver = P3C_SOLVER_ORACLE;
  auto big = generate("path", {30});
  CHECK(p3c_beta_c(big.get(), &o, &out) == P3C_ERR_SIZE_REFUSAL);
  o.oracle_bound = 30;
  REQUIRE(p3c_beta_c(big.get(), &o, &out) == P3C_OK);
  CHECK(p3c_solution_value(out) == 20);
  p3c_solution_free(out);
  CHECK(p3c_beta_c(p6.get(), nullptr, &out) == P3C_OK);
  p3c_solution_free(out);

  REQUIRE(p3c_caratheodory(generate("path", {3}).get(), 0, &out) == P3C_OK);
  CHECK(p3c_solution_value(out) == 2);
  p3c_solution_free(out);
}

TEST_CASE("generators and the ladder marked set") {
  auto l = generate("ladder", {5});
  CHECK(p3c_graph_order(l.get()) == 10);
  CHECK(p3c_graph_size(l.get()) == 13);
  p3c_list* m = nullptr;
  REQUIRE(p3c_ladder_marked_set(5, &m) == P3C_OK);
  List marked(m);
  p3c_hull* h = nullptr;
  REQUIRE(p3c_hull_compute(l.get(), p3c_list_data(m), p3c_list_size(m), &h) == P3C_OK);
  size_t n = 0;
  p3c_hull_members(h, &n);
  CHECK(n == 10);
  p3c_hull_free(h);
  p3c_list* b = nullptr;
  REQUIRE(p3c_boundary(l.get(), p3c_list_data(m), p3c_list_size(m), &b) == P3C_OK);
  CHECK(p3c_list_size(b) > 0);
  p3c_list_free(b);

  auto a = generate("random-perm", {12}, 7), a2 = generate("random-perm", {12}, 7);
  p3c_list *d1 = nullptr, *d2 = nullptr;
  REQUIRE(p3c_graph_diagram(a.get(), &d1) == P3C_OK);
  REQUIRE(p3c_graph_diagram(a2.get(), &d2) == P3C_OK);
  CHECK(items(d1) == items(d2));
  p3c_list_free(d1);
  p3c_list_free(d2);
  auto t = generate("random-tree", {40}, 3);
  CHECK(p3c_graph_size(t.get()) == 39);
  auto sp = generate("spider", {3, 2});
  CHECK(p3c_solution_value(solve(sp.get()).get()) == 5);
  auto cg = generate("random-cograph", {10}, 2);
  p3c_class c;
  REQUIRE(p3c_graph_classify(cg.get(), &c) == P3C_OK);
  CHECK((c == P3C_CLASS_COGRAPH || c == P3C_CLASS_PATH || c == P3C_CLASS_TREE || c == P3C_CLASS_CYCLE ||
         c == P3C_CLASS_GENERIC));
  p3c_graph* bad = nullptr;
  CHECK(p3c_generate("path", nullptr, 0, 1, &bad) == P3C_ERR_ARGUMENT);

  auto two = generate("ladder", {3});
  p3c_list* lab = nullptr;
  REQUIRE(p3c_graph_components(two.get(), &lab) == P3C_OK);
  CHECK(items(lab) == std::vector<int32_t>(6, 0));
  p3c_list_free(lab);
}

TEST_CASE("validation through the C API") {
  REQUIRE(p3c_validation_suite_count() > 0);
  bool has_perm = false;
  for (size_t i = 0; i < p3c_validation_suite_count(); ++i)
    has_perm = has_perm || std::string(p3c_validation_suite_name(i)) == "permutation";
  CHECK(has_perm);
  p3c_validate_options o{"permutation", 6, 1, 0, 2, nullptr};
  p3c_validation* v = nullptr;
  REQUIRE(p3c_validate(&o, &v) == P3C_OK);
  Validation val(v);
  CHECK(p3c_validation_total(v) == 720);
  CHECK(p3c_validation_passed(v) == 720);
  CHECK(std::string(p3c_validation_summary(v)) == "720/720 ok");
  CHECK(p3c_validation_failure_count(v) == 0);
  CHECK(p3c_validation_fixture_count(v) == 0);
  CHECK(p3c_validation_failure(v, 3) == nullptr);
  o.suite = "nonsense";
  p3c_validation* bad = nullptr;
  CHECK(p3c_validate(&o, &bad) == P3C_ERR_DISPATCH);
  CHECK(p3c_validate(nullptr, &bad) == P3C_ERR_ARGUMENT);
}
