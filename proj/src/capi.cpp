#include "p3c/p3c.h"

#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "p3c/convexity.hpp"
#include "p3c/generators.hpp"
#include "p3c/graph.hpp"
#include "p3c/oracle.hpp"
#include "p3c/solve.hpp"
#include "p3c/validate.hpp"

struct p3c_graph {
  p3c::Graph graph;
  std::optional<p3c::PermutationDiagram> diagram;
};

struct p3c_list {
  std::vector<int32_t> values;
};

struct p3c_hull {
  p3c::HullTrace trace;
};

struct p3c_verdict {
  bool independent = true;
  int32_t violator = -1;
  std::vector<int32_t> certificate;
};

struct p3c_solution {
  int64_t value = 0;
  std::vector<int32_t> witness;
  p3c_solver solver = P3C_SOLVER_AUTO;
  uint64_t explored = 0;
};

struct p3c_validation {
  p3c::ValidateReport report;
  std::string summary;
};

namespace {

thread_local std::string last_error;

p3c_status code_of(p3c::ErrorCode c) {
  switch (c) {
    case p3c::ErrorCode::argument: return P3C_ERR_ARGUMENT;
    case p3c::ErrorCode::parse: return P3C_ERR_PARSE;
    case p3c::ErrorCode::invalid_set: return P3C_ERR_INVALID_SET;
    case p3c::ErrorCode::not_cograph: return P3C_ERR_NOT_COGRAPH;
    case p3c::ErrorCode::dispatch: return P3C_ERR_DISPATCH;
    case p3c::ErrorCode::size_refusal: return P3C_ERR_SIZE_REFUSAL;
    case p3c::ErrorCode::verification: return P3C_ERR_VERIFICATION;
  }
  return P3C_ERR_INTERNAL;
}

p3c_status fail(p3c_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

template <class F>
p3c_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return P3C_OK;
  } catch (const p3c::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(P3C_ERR_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(P3C_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(P3C_ERR_INTERNAL, "unknown error");
  }
}

void need(const void* p, const char* what) {
  if (!p) throw p3c::Error(p3c::ErrorCode::argument, std::string(what) + " must not be null");
}

p3c::VertexSet make_set(const p3c_graph* g, const int32_t* set, size_t k) {
  if (k && !set) throw p3c::Error(p3c::ErrorCode::argument, "set must not be null");
  std::vector<p3c::Vertex> ids(set, set + k);
  p3c::VertexSet s(std::move(ids));
  if (s.size() != k) throw p3c::Error(p3c::ErrorCode::invalid_set, "set contains repeated vertices");
  s.check_range(g->graph.order());
  return s;
}

std::vector<int32_t> to_ints(const p3c::VertexSet& s) { return {s.begin(), s.end()}; }

p3c_list* new_list(std::vector<int32_t> values) { return new p3c_list{std::move(values)}; }

const int32_t* data_of(const std::vector<int32_t>& v, size_t* count) {
  if (count) *count = v.size();
  return v.data();
}

const int32_t* none(size_t* count) {
  if (count) *count = 0;
  return nullptr;
}

p3c_solver to_c(p3c::Solver s) {
  switch (s) {
    case p3c::Solver::automatic: return P3C_SOLVER_AUTO;
    case p3c::Solver::oracle: return P3C_SOLVER_ORACLE;
    case p3c::Solver::path: return P3C_SOLVER_PATH;
    case p3c::Solver::cycle: return P3C_SOLVER_CYCLE;
    case p3c::Solver::tree: return P3C_SOLVER_TREE;
    case p3c::Solver::cograph: return P3C_SOLVER_COGRAPH;
    case p3c::Solver::permutation: return P3C_SOLVER_PERMUTATION;
  }
  return P3C_SOLVER_AUTO;
}

p3c::Solver from_c(p3c_solver s) {
  switch (s) {
    case P3C_SOLVER_AUTO: return p3c::Solver::automatic;
    case P3C_SOLVER_ORACLE: return p3c::Solver::oracle;
    case P3C_SOLVER_PATH: return p3c::Solver::path;
    case P3C_SOLVER_CYCLE: return p3c::Solver::cycle;
    case P3C_SOLVER_TREE: return p3c::Solver::tree;
    case P3C_SOLVER_COGRAPH: return p3c::Solver::cograph;
    case P3C_SOLVER_PERMUTATION: return p3c::Solver::permutation;
  }
  throw p3c::Error(p3c::ErrorCode::argument, "unknown solver");
}

p3c::DpMode from_c(p3c_mode m) {
  switch (m) {
    case P3C_MODE_STATE: return p3c::DpMode::state;
    case P3C_MODE_WITNESS: return p3c::DpMode::witness;
    case P3C_MODE_ORACLE_CHECK: return p3c::DpMode::oracle_check;
  }
  throw p3c::Error(p3c::ErrorCode::argument, "unknown mode");
}

p3c::Vertex bound_of(int32_t b) { return b > 0 ? b : p3c::kDefaultOracleBound; }

int64_t param(const int64_t* params, size_t count, size_t i, const std::string& kind) {
  if (i >= count) throw p3c::Error(p3c::ErrorCode::argument, kind + ": missing size parameter");
  if (params[i] < 0 || params[i] > 1'000'000)
    throw p3c::Error(p3c::ErrorCode::argument, kind + ": size parameter out of range");
  return params[i];
}

}  // namespace

extern "C" {

const char* p3c_version(void) { return "1.0.0"; }

const char* p3c_last_error(void) { return last_error.c_str(); }

const char* p3c_status_name(p3c_status status) {
  switch (status) {
    case P3C_OK: return "ok";
    case P3C_ERR_ARGUMENT: return "argument";
    case P3C_ERR_PARSE: return "parse";
    case P3C_ERR_INVALID_SET: return "invalid-set";
    case P3C_ERR_NOT_COGRAPH: return "not-cograph";
    case P3C_ERR_DISPATCH: return "dispatch";
    case P3C_ERR_SIZE_REFUSAL: return "size-refusal";
    case P3C_ERR_VERIFICATION: return "verification";
    case P3C_ERR_MEMORY: return "memory";
    case P3C_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

size_t p3c_list_size(const p3c_list* list) { return list ? list->values.size() : 0; }
const int32_t* p3c_list_data(const p3c_list* list) { return list ? list->values.data() : nullptr; }
void p3c_list_free(p3c_list* list) { delete list; }

void p3c_string_free(char* text) { delete[] text; }

p3c_status p3c_graph_parse(const char* text, p3c_format format, p3c_graph** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    auto g = std::make_unique<p3c_graph>();
    if (format == P3C_FORMAT_PERMUTATION) {
      g->diagram = p3c::parse_permutation(std::string_view(text));
      g->graph = p3c::diagram_to_graph(*g->diagram);
    } else if (format == P3C_FORMAT_EDGE_LIST) {
      g->graph = p3c::parse_edge_list(std::string_view(text));
    } else {
      throw p3c::Error(p3c::ErrorCode::argument, "unknown format");
    }
    *out = g.release();
  });
}

p3c_status p3c_graph_create(int32_t n, const int32_t* edges, size_t m, p3c_graph** out) {
  return guard([&] {
    need(out, "out");
    if (n < 0) throw p3c::Error(p3c::ErrorCode::argument, "negative vertex count");
    if (m && !edges) throw p3c::Error(p3c::ErrorCode::argument, "edges must not be null");
    std::vector<p3c::Edge> es;
    es.reserve(m);
    for (size_t i = 0; i < m; ++i) es.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new p3c_graph{p3c::Graph(n, es), std::nullopt};
  });
}

p3c_status p3c_graph_from_permutation(const int32_t* bottoms, int32_t n, p3c_graph** out) {
  return guard([&] {
    need(out, "out");
    if (n < 0 || (n && !bottoms)) throw p3c::Error(p3c::ErrorCode::argument, "bad permutation buffer");
    p3c::PermutationDiagram d(std::vector<p3c::Vertex>(bottoms, bottoms + n));
    *out = new p3c_graph{p3c::diagram_to_graph(d), d};
  });
}

void p3c_graph_free(p3c_graph* g) { delete g; }

int32_t p3c_graph_order(const p3c_graph* g) { return g ? g->graph.order() : 0; }
size_t p3c_graph_size(const p3c_graph* g) { return g ? g->graph.size() : 0; }
int p3c_graph_has_diagram(const p3c_graph* g) { return g && g->diagram ? 1 : 0; }

p3c_status p3c_graph_edges(const p3c_graph* g, p3c_list** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    std::vector<int32_t> flat;
    for (auto [u, v] : g->graph.edges()) {
      flat.push_back(u);
      flat.push_back(v);
    }
    *out = new_list(std::move(flat));
  });
}

p3c_status p3c_graph_diagram(const p3c_graph* g, p3c_list** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    if (!g->diagram) throw p3c::Error(p3c::ErrorCode::argument, "graph has no permutation diagram");
    *out = new_list({g->diagram->bottoms().begin(), g->diagram->bottoms().end()});
  });
}

p3c_status p3c_graph_format(const p3c_graph* g, p3c_format format, char** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    std::string text;
    if (format == P3C_FORMAT_PERMUTATION) {
      if (!g->diagram) throw p3c::Error(p3c::ErrorCode::argument, "graph has no permutation diagram");
      text = p3c::format_permutation(*g->diagram);
    } else {
      text = p3c::format_edge_list(g->graph);
    }
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out = buf;
  });
}

p3c_status p3c_graph_classify(const p3c_graph* g, p3c_class* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = static_cast<p3c_class>(p3c::classify(g->graph, g->diagram.has_value()));
  });
}

const char* p3c_class_name(p3c_class c) {
  switch (c) {
    case P3C_CLASS_PATH: return "path";
    case P3C_CLASS_CYCLE: return "cycle";
    case P3C_CLASS_TREE: return "tree";
    case P3C_CLASS_COGRAPH: return "cograph";
    case P3C_CLASS_PERMUTATION_INPUT: return "permutation-input";
    case P3C_CLASS_GENERIC: return "generic";
  }
  return "unknown";
}

p3c_status p3c_graph_components(const p3c_graph* g, p3c_list** labels) {
  return guard([&] {
    need(g, "graph");
    need(labels, "out");
    std::vector<int32_t> lab(static_cast<size_t>(g->graph.order()), -1);
    int32_t id = 0;
    for (const auto& c : p3c::components(g->graph)) {
      for (auto v : c) lab[static_cast<size_t>(v)] = id;
      ++id;
    }
    *labels = new_list(std::move(lab));
  });
}

p3c_status p3c_generate(const char* kind, const int64_t* params, size_t count, uint64_t seed, p3c_graph** out) {
  return guard([&] {
    need(kind, "kind");
    need(out, "out");
    if (count && !params) throw p3c::Error(p3c::ErrorCode::argument, "params must not be null");
    std::string k = kind;
    auto p = [&](size_t i) { return static_cast<int>(param(params, count, i, k)); };
    auto g = std::make_unique<p3c_graph>();
    if (k == "path") {
      g->graph = p3c::gen_path(p(0));
    } else if (k == "cycle") {
      g->graph = p3c::gen_cycle(p(0));
    } else if (k == "star") {
      g->graph = p3c::gen_star(p(0));
    } else if (k == "spider") {
      g->graph = p3c::gen_spider(p(0), p(1));
    } else if (k == "ladder") {
      auto l = p3c::gen_ladder(p(0));
      g->graph = std::move(l.graph);
      g->diagram = std::move(l.diagram);
    } else if (k == "random-perm") {
      g->diagram = p3c::gen_random_permutation(p(0), seed);
      g->graph = p3c::diagram_to_graph(*g->diagram);
    } else if (k == "random-cograph") {
      g->graph = p3c::gen_random_cograph(p(0), seed).graph;
    } else if (k == "random-tree") {
      g->graph = p3c::gen_random_tree(p(0), seed);
    } else {
      throw p3c::Error(p3c::ErrorCode::dispatch, "unknown generator kind '" + k + "'");
    }
    *out = g.release();
  });
}

p3c_status p3c_ladder_marked_set(int32_t k, p3c_list** out) {
  return guard([&] {
    need(out, "out");
    *out = new_list(to_ints(p3c::ladder_marked_set(p3c::gen_ladder(k))));
  });
}

p3c_status p3c_hull_compute(const p3c_graph* g, const int32_t* set, size_t k, p3c_hull** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new p3c_hull{p3c::hull(g->graph, make_set(g, set, k))};
  });
}

const int32_t* p3c_hull_members(const p3c_hull* h, size_t* count) {
  if (!h) return none(count);
  return data_of(h->trace.hull.values(), count);
}

const int32_t* p3c_hull_order(const p3c_hull* h, size_t* count) {
  if (!h) return none(count);
  return data_of(h->trace.order, count);
}

int p3c_hull_parents(const p3c_hull* h, int32_t v, int32_t* first, int32_t* second) {
  if (!h || v < 0 || static_cast<size_t>(v) >= h->trace.parents.size()) return 0;
  auto p = h->trace.parents_of(v);
  if (!p) return 0;
  if (first) *first = p->first;
  if (second) *second = p->second;
  return 1;
}

void p3c_hull_free(p3c_hull* h) { delete h; }

p3c_status p3c_is_convex(const p3c_graph* g, const int32_t* set, size_t k, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = p3c::is_convex(g->graph, make_set(g, set, k)) ? 1 : 0;
  });
}

p3c_status p3c_is_two_packing(const p3c_graph* g, const int32_t* set, size_t k, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = p3c::is_two_packing(g->graph, make_set(g, set, k)) ? 1 : 0;
  });
}

p3c_status p3c_two_path(const p3c_graph* g, const int32_t* set, size_t k, int32_t x, int* found, p3c_list** path) {
  return guard([&] {
    need(g, "graph");
    need(found, "found");
    need(path, "path");
    auto s = make_set(g, set, k);
    p3c::VertexSet{x}.check_range(g->graph.order());
    auto seq = p3c::two_path_certificate(g->graph, s, x);
    *found = seq ? 1 : 0;
    *path = new_list(seq ? std::vector<int32_t>(seq->begin(), seq->end()) : std::vector<int32_t>{});
  });
}

p3c_status p3c_check(const p3c_graph* g, const int32_t* set, size_t k, p3c_verdict** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    auto s = make_set(g, set, k);
    auto verdict = p3c::is_convexly_independent(g->graph, s);
    auto v = std::make_unique<p3c_verdict>();
    v->independent = verdict.independent;
    if (verdict.violator) {
      v->violator = *verdict.violator;
      if (auto seq = p3c::two_path_certificate(g->graph, s.without(*verdict.violator), *verdict.violator))
        v->certificate.assign(seq->begin(), seq->end());
    }
    *out = v.release();
  });
}

int p3c_verdict_independent(const p3c_verdict* v) { return v && v->independent ? 1 : 0; }
int32_t p3c_verdict_violator(const p3c_verdict* v) { return v ? v->violator : -1; }

const int32_t* p3c_verdict_certificate(const p3c_verdict* v, size_t* count) {
  if (!v) return none(count);
  return data_of(v->certificate, count);
}

void p3c_verdict_free(p3c_verdict* v) { delete v; }

p3c_status p3c_boundary(const p3c_graph* g, const int32_t* set, size_t k, p3c_list** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = new_list(to_ints(p3c::sigma_boundary(g->graph, make_set(g, set, k))));
  });
}

p3c_status p3c_is_irredundant(const p3c_graph* g, const int32_t* set, size_t k, int* out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    *out = p3c::is_irredundant(g->graph, make_set(g, set, k)) ? 1 : 0;
  });
}

p3c_solve_options p3c_solve_options_default(void) { return {P3C_SOLVER_AUTO, P3C_MODE_WITNESS, 0}; }

const char* p3c_solver_name(p3c_solver s) {
  try {
    return p3c::to_string(from_c(s)).data();
  } catch (...) {
    return "unknown";
  }
}

p3c_status p3c_solver_from_name(const char* name, p3c_solver* out) {
  return guard([&] {
    need(name, "name");
    need(out, "out");
    auto s = p3c::solver_from_string(name);
    if (!s) throw p3c::Error(p3c::ErrorCode::argument, std::string("unknown solver '") + name + "'");
    *out = to_c(*s);
  });
}

p3c_status p3c_beta_c(const p3c_graph* g, const p3c_solve_options* options, p3c_solution** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    p3c_solve_options o = options ? *options : p3c_solve_options_default();
    p3c::SolveOptions so;
    so.solver = from_c(o.solver);
    so.mode = from_c(o.mode);
    so.oracle_bound = bound_of(o.oracle_bound);
    auto r = p3c::solve_beta_c(g->graph, g->diagram ? &*g->diagram : nullptr, so);
    *out = new p3c_solution{r.value, to_ints(r.witness), to_c(r.solver), r.explored};
  });
}

p3c_status p3c_caratheodory(const p3c_graph* g, int32_t oracle_bound, p3c_solution** out) {
  return guard([&] {
    need(g, "graph");
    need(out, "out");
    auto r = p3c::caratheodory_oracle(g->graph, {bound_of(oracle_bound), std::nullopt});
    if (!r.witness.empty() && !p3c::is_irredundant(g->graph, r.witness))
      throw p3c::Error(p3c::ErrorCode::verification, "Caratheodory witness failed re-verification");
    *out = new p3c_solution{r.value, to_ints(r.witness), P3C_SOLVER_ORACLE, r.explored};
  });
}

int64_t p3c_solution_value(const p3c_solution* s) { return s ? s->value : 0; }

const int32_t* p3c_solution_witness(const p3c_solution* s, size_t* count) {
  if (!s) return none(count);
  return data_of(s->witness, count);
}

p3c_solver p3c_solution_solver(const p3c_solution* s) { return s ? s->solver : P3C_SOLVER_AUTO; }
uint64_t p3c_solution_explored(const p3c_solution* s) { return s ? s->explored : 0; }
void p3c_solution_free(p3c_solution* s) { delete s; }

size_t p3c_validation_suite_count(void) { return p3c::validation_suites().size(); }

const char* p3c_validation_suite_name(size_t i) {
  static const std::vector<std::string> names = p3c::validation_suites();
  return i < names.size() ? names[i].c_str() : nullptr;
}

p3c_status p3c_validate(const p3c_validate_options* options, p3c_validation** out) {
  return guard([&] {
    need(options, "options");
    need(options->suite, "suite");
    need(out, "out");
    p3c::ValidateOptions vo;
    vo.suite = options->suite;
    vo.max_n = options->max_n;
    vo.seed = options->seed;
    vo.samples = options->samples;
    vo.threads = options->threads;
    if (options->fixture_dir) vo.fixture_dir = options->fixture_dir;
    auto v = std::make_unique<p3c_validation>();
    v->report = p3c::run_validation(vo);
    v->summary = v->report.summary();
    *out = v.release();
  });
}

uint64_t p3c_validation_total(const p3c_validation* v) { return v ? v->report.total : 0; }
uint64_t p3c_validation_passed(const p3c_validation* v) { return v ? v->report.passed : 0; }
const char* p3c_validation_summary(const p3c_validation* v) { return v ? v->summary.c_str() : ""; }
size_t p3c_validation_failure_count(const p3c_validation* v) { return v ? v->report.failures.size() : 0; }

const char* p3c_validation_failure(const p3c_validation* v, size_t i) {
  return v && i < v->report.failures.size() ? v->report.failures[i].c_str() : nullptr;
}

size_t p3c_validation_fixture_count(const p3c_validation* v) { return v ? v->report.fixture_files.size() : 0; }

const char* p3c_validation_fixture(const p3c_validation* v, size_t i) {
  return v && i < v->report.fixture_files.size() ? v->report.fixture_files[i].c_str() : nullptr;
}

void p3c_validation_free(p3c_validation* v) { delete v; }

}  // extern "C"
