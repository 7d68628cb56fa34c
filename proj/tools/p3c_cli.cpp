// p3c command-line front end. Talks to the library only through p3c.h.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "p3c/p3c.h"

namespace {

using json = nlohmann::ordered_json;

// Exit codes.
enum : int {
  kOk = 0,
  kDependent = 1,
  kParse = 2,
  kBadSet = 3,
  kDispatch = 4,
  kSizeRefusal = 5,
  kVerification = 6,
  kOther = 7,
};

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(p3c_status s) {
  switch (s) {
    case P3C_OK: return kOk;
    case P3C_ERR_PARSE: return kParse;
    case P3C_ERR_INVALID_SET: return kBadSet;
    case P3C_ERR_DISPATCH:
    case P3C_ERR_NOT_COGRAPH: return kDispatch;
    case P3C_ERR_SIZE_REFUSAL: return kSizeRefusal;
    case P3C_ERR_VERIFICATION: return kVerification;
    default: return kOther;
  }
}

void ok(p3c_status s) {
  if (s != P3C_OK) throw Failure{exit_code_for(s), p3c_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<p3c_graph, Deleter<p3c_graph, p3c_graph_free>>;
using ListPtr = std::unique_ptr<p3c_list, Deleter<p3c_list, p3c_list_free>>;
using HullPtr = std::unique_ptr<p3c_hull, Deleter<p3c_hull, p3c_hull_free>>;
using VerdictPtr = std::unique_ptr<p3c_verdict, Deleter<p3c_verdict, p3c_verdict_free>>;
using SolutionPtr = std::unique_ptr<p3c_solution, Deleter<p3c_solution, p3c_solution_free>>;
using ValidationPtr = std::unique_ptr<p3c_validation, Deleter<p3c_validation, p3c_validation_free>>;

struct Globals {
  bool json = false;
  std::string input = "-";
  std::string format;  // edge-list | permutation; empty = command default
  std::uint64_t seed = 1;
};

std::vector<int32_t> one_based(const int32_t* p, size_t n) {
  std::vector<int32_t> out(p, p + n);
  for (auto& v : out) ++v;
  return out;
}

std::vector<int32_t> one_based(const std::vector<int32_t>& v) { return one_based(v.data(), v.size()); }

std::string join(const std::vector<int32_t>& v, const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string braces(const std::vector<int32_t>& v) { return "{" + join(v, ",") + "}"; }

p3c_format format_of(const std::string& name) {
  if (name.empty() || name == "edge-list") return P3C_FORMAT_EDGE_LIST;
  if (name == "permutation") return P3C_FORMAT_PERMUTATION;
  throw Failure{kDispatch, "unknown format '" + name + "'"};
}

GraphPtr load(const Globals& g) {
  std::string text;
  if (g.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(g.input, std::ios::binary);
    if (!in) throw Failure{kParse, "cannot read '" + g.input + "'"};
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  p3c_graph* out = nullptr;
  ok(p3c_graph_parse(text.c_str(), format_of(g.format), &out));
  return GraphPtr(out);
}

std::string descriptor(const Globals& g) { return g.input == "-" ? "stdin" : g.input; }

// "1,2,3" (1-based) -> 0-based ids; range checks happen in the library.
std::vector<int32_t> parse_set(const std::string& text) {
  std::vector<int32_t> ids;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto b = tok.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    tok = tok.substr(b, tok.find_last_not_of(" \t") - b + 1);
    size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1 || v > INT32_MAX) throw Failure{kBadSet, "bad vertex '" + tok + "' in --set"};
    ids.push_back(static_cast<int32_t>(v - 1));
  }
  return ids;
}

int32_t oracle_bound() {
  const char* env = std::getenv("P3C_ORACLE_MAX");
  if (!env || !*env) return 0;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end || v < 1 || v > 1'000'000) throw Failure{kOther, "P3C_ORACLE_MAX must be a positive integer"};
  return static_cast<int32_t>(v);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text;
}

int cmd_hull(const Globals& gl, const std::string& set_text) {
  auto t0 = std::chrono::steady_clock::now();
  auto g = load(gl);
  auto set = parse_set(set_text);
  p3c_hull* raw = nullptr;
  ok(p3c_hull_compute(g.get(), set.data(), set.size(), &raw));
  HullPtr h(raw);
  size_t nm = 0, no = 0;
  const int32_t* members = p3c_hull_members(h.get(), &nm);
  const int32_t* order = p3c_hull_order(h.get(), &no);
  json parents = json::object();
  std::ostringstream text;
  text << "hull: " << braces(one_based(members, nm)) << "\n";
  text << "order: " << join(one_based(order, no)) << "\n";
  for (size_t i = 0; i < no; ++i) {
    int32_t a = 0, b = 0;
    if (p3c_hull_parents(h.get(), order[i], &a, &b)) {
      parents[std::to_string(order[i] + 1)] = {a + 1, b + 1};
      text << "  " << order[i] + 1 << " <- " << a + 1 << ", " << b + 1 << "\n";
    }
  }
  json j = {{"command", "hull"},      {"input", descriptor(gl)},          {"set", one_based(set)},
            {"hull", one_based(members, nm)}, {"order", one_based(order, no)}, {"parents", parents},
            {"elapsed_ms", ms_since(t0)}};
  emit(gl, j, text.str());
  return kOk;
}

int cmd_check(const Globals& gl, const std::string& set_text) {
  auto t0 = std::chrono::steady_clock::now();
  auto g = load(gl);
  auto set = parse_set(set_text);
  p3c_verdict* raw = nullptr;
  ok(p3c_check(g.get(), set.data(), set.size(), &raw));
  VerdictPtr v(raw);
  bool independent = p3c_verdict_independent(v.get());
  size_t nc = 0;
  const int32_t* cert = p3c_verdict_certificate(v.get(), &nc);
  json j = {{"command", "check"}, {"input", descriptor(gl)}, {"set", one_based(set)}, {"independent", independent}};
  std::ostringstream text;
  if (independent) {
    j["violator"] = nullptr;
    text << "independent\n";
  } else {
    int32_t x = p3c_verdict_violator(v.get());
    j["violator"] = x + 1;
    j["certificate"] = one_based(cert, nc);
    text << "dependent: violator " << x + 1 << "\n";
    text << "2-path: " << join(one_based(cert, nc)) << "\n";
  }
  j["elapsed_ms"] = ms_since(t0);
  emit(gl, j, text.str());
  return independent ? kOk : kDependent;
}

// Re-checks a convexly independent witness through the library before it is printed.
void verify_independent(const p3c_graph* g, const int32_t* w, size_t n, int64_t value) {
  p3c_verdict* raw = nullptr;
  ok(p3c_check(g, w, n, &raw));
  VerdictPtr v(raw);
  if (!p3c_verdict_independent(v.get()) || static_cast<int64_t>(n) != value)
    throw Failure{kVerification, "witness failed re-verification"};
}

struct BetaOptions {
  std::string solver = "auto";
  std::string mode = "witness";
};

p3c_solve_options solve_options(const BetaOptions& o) {
  p3c_solve_options so = p3c_solve_options_default();
  if (p3c_solver_from_name(o.solver.c_str(), &so.solver) != P3C_OK)
    throw Failure{kDispatch, "unknown solver '" + o.solver + "'"};
  if (o.mode == "state")
    so.mode = P3C_MODE_STATE;
  else if (o.mode == "witness")
    so.mode = P3C_MODE_WITNESS;
  else if (o.mode == "oracle-check")
    so.mode = P3C_MODE_ORACLE_CHECK;
  else
    throw Failure{kDispatch, "unknown mode '" + o.mode + "'"};
  so.oracle_bound = oracle_bound();
  return so;
}

int cmd_beta_c(const Globals& gl, const BetaOptions& bo) {
  auto t0 = std::chrono::steady_clock::now();
  auto g = load(gl);
  auto so = solve_options(bo);
  p3c_solution* raw = nullptr;
  ok(p3c_beta_c(g.get(), &so, &raw));
  SolutionPtr s(raw);
  size_t nw = 0;
  const int32_t* w = p3c_solution_witness(s.get(), &nw);
  int64_t value = p3c_solution_value(s.get());
  verify_independent(g.get(), w, nw, value);
  double ms = ms_since(t0);
  const char* solver = p3c_solver_name(p3c_solution_solver(s.get()));
  json j = {{"command", "beta-c"},       {"input", descriptor(gl)}, {"solver", solver},
            {"mode", bo.mode},           {"value", value},          {"witness", one_based(w, nw)},
            {"explored", p3c_solution_explored(s.get())}, {"elapsed_ms", ms}};
  std::ostringstream text;
  text << "beta_c = " << value << " (solver " << solver << ")\n";
  text << "witness: " << braces(one_based(w, nw)) << "\n";
  emit(gl, j, text.str());
  return kOk;
}

int cmd_caratheodory(const Globals& gl) {
  auto t0 = std::chrono::steady_clock::now();
  auto g = load(gl);
  p3c_solution* raw = nullptr;
  ok(p3c_caratheodory(g.get(), oracle_bound(), &raw));
  SolutionPtr s(raw);
  size_t nw = 0;
  const int32_t* w = p3c_solution_witness(s.get(), &nw);
  int64_t value = p3c_solution_value(s.get());
  if (nw) {
    int irr = 0;
    ok(p3c_is_irredundant(g.get(), w, nw, &irr));
    if (!irr || static_cast<int64_t>(nw) != value) throw Failure{kVerification, "witness failed re-verification"};
  }
  json j = {{"command", "caratheodory"}, {"input", descriptor(gl)}, {"value", value},
            {"witness", one_based(w, nw)}, {"explored", p3c_solution_explored(s.get())},
            {"elapsed_ms", ms_since(t0)}};
  std::ostringstream text;
  text << "caratheodory = " << value << "\n";
  text << "witness: " << braces(one_based(w, nw)) << "\n";
  emit(gl, j, text.str());
  return kOk;
}

int cmd_boundary(const Globals& gl, const std::string& set_text) {
  auto t0 = std::chrono::steady_clock::now();
  auto g = load(gl);
  auto set = parse_set(set_text);
  p3c_list* raw = nullptr;
  ok(p3c_boundary(g.get(), set.data(), set.size(), &raw));
  ListPtr b(raw);
  auto boundary = one_based(p3c_list_data(b.get()), p3c_list_size(b.get()));
  p3c_hull* hraw = nullptr;
  ok(p3c_hull_compute(g.get(), set.data(), set.size(), &hraw));
  HullPtr h(hraw);
  size_t nm = 0;
  const int32_t* members = p3c_hull_members(h.get(), &nm);
  bool spanning = static_cast<int32_t>(nm) == p3c_graph_order(g.get());
  json j = {{"command", "boundary"}, {"input", descriptor(gl)},     {"set", one_based(set)},
            {"boundary", boundary},  {"irredundant", !boundary.empty()}, {"hull", one_based(members, nm)},
            {"hull_is_all", spanning}, {"elapsed_ms", ms_since(t0)}};
  std::ostringstream text;
  text << "boundary: " << braces(boundary) << (boundary.empty() ? " (redundant)" : " (irredundant)") << "\n";
  text << "hull: " << braces(one_based(members, nm)) << (spanning ? " (all vertices)" : "") << "\n";
  emit(gl, j, text.str());
  return kOk;
}

GraphPtr generate(const std::string& kind, const std::vector<int64_t>& params, std::uint64_t seed) {
  p3c_graph* raw = nullptr;
  ok(p3c_generate(kind.c_str(), params.data(), params.size(), seed, &raw));
  return GraphPtr(raw);
}

int cmd_gen(const Globals& gl, const std::string& kind, const std::vector<int64_t>& params) {
  auto g = generate(kind, params, gl.seed);
  p3c_format f = gl.format.empty() ? (kind == "random-perm" ? P3C_FORMAT_PERMUTATION : P3C_FORMAT_EDGE_LIST)
                                   : format_of(gl.format);
  char* text = nullptr;
  ok(p3c_graph_format(g.get(), f, &text));
  std::string out = text;
  p3c_string_free(text);
  if (gl.json) {
    json j = {{"command", "gen"}, {"kind", kind}, {"params", params}, {"seed", gl.seed},
              {"format", f == P3C_FORMAT_PERMUTATION ? "permutation" : "edge-list"}, {"text", out}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << out;
    if (!out.empty() && out.back() != '\n') std::cout << "\n";
  }
  return kOk;
}

struct ValidateArgs {
  std::string suite;
  int max_n = 0;
  int samples = 0;
  int threads = 0;
  std::string fixture_dir = ".";
};

int cmd_validate(const Globals& gl, const ValidateArgs& a) {
  auto t0 = std::chrono::steady_clock::now();
  p3c_validate_options o{a.suite.c_str(), a.max_n, gl.seed, a.samples, a.threads, a.fixture_dir.c_str()};
  p3c_validation* raw = nullptr;
  p3c_status st = p3c_validate(&o, &raw);
  if (st == P3C_ERR_ARGUMENT) throw Failure{kDispatch, p3c_last_error()};
  ok(st);
  ValidationPtr v(raw);
  std::vector<std::string> failures, fixtures;
  for (size_t i = 0; i < p3c_validation_failure_count(v.get()); ++i) failures.emplace_back(p3c_validation_failure(v.get(), i));
  for (size_t i = 0; i < p3c_validation_fixture_count(v.get()); ++i) fixtures.emplace_back(p3c_validation_fixture(v.get(), i));
  bool all = p3c_validation_passed(v.get()) == p3c_validation_total(v.get());
  json j = {{"command", "validate"}, {"suite", a.suite}, {"total", p3c_validation_total(v.get())},
            {"passed", p3c_validation_passed(v.get())}, {"summary", p3c_validation_summary(v.get())},
            {"failures", failures}, {"fixtures", fixtures}, {"elapsed_ms", ms_since(t0)}};
  std::ostringstream text;
  text << p3c_validation_summary(v.get()) << "\n";
  for (const auto& f : failures) text << "  " << f << "\n";
  for (const auto& f : fixtures) text << "  counterexample written to " << f << "\n";
  emit(gl, j, text.str());
  return all ? kOk : kVerification;
}

int cmd_bench(const Globals& gl, const std::string& kind, const std::vector<int64_t>& sizes, const BetaOptions& bo) {
  auto so = solve_options(bo);
  json rows = json::array();
  std::ostringstream text;
  text << "kind n value solver ms\n";
  for (int64_t n : sizes) {
    auto g = generate(kind, {n}, gl.seed);
    auto t0 = std::chrono::steady_clock::now();
    p3c_solution* raw = nullptr;
    ok(p3c_beta_c(g.get(), &so, &raw));
    SolutionPtr s(raw);
    double ms = ms_since(t0);
    size_t nw = 0;
    const int32_t* w = p3c_solution_witness(s.get(), &nw);
    verify_independent(g.get(), w, nw, p3c_solution_value(s.get()));
    const char* solver = p3c_solver_name(p3c_solution_solver(s.get()));
    rows.push_back({{"kind", kind}, {"n", n}, {"value", p3c_solution_value(s.get())}, {"solver", solver}, {"ms", ms}});
    text << kind << " " << n << " " << p3c_solution_value(s.get()) << " " << solver << " " << ms << "\n";
  }
  json j = {{"command", "bench"}, {"seed", gl.seed}, {"rows", rows}};
  emit(gl, j, text.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P3-convexity: hulls, convex independence and Caratheodory numbers"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Print one JSON object instead of text");
  app.add_option("-i,--input", gl.input, "Input file ('-' for stdin)");
  app.add_option("--format", gl.format, "Input/output format: edge-list or permutation");
  app.add_option("--seed", gl.seed, "Seed for generators and validation");

  std::string set_text;
  auto* hull = app.add_subcommand("hull", "Convex hull of a vertex set with parent certificates");
  hull->add_option("--set", set_text, "Comma-separated 1-based vertices")->required();
  auto* check = app.add_subcommand("check", "Test convex independence (exit 1 when dependent)");
  check->add_option("--set", set_text, "Comma-separated 1-based vertices")->required();
  auto* boundary = app.add_subcommand("boundary", "Boundary of a vertex set (irredundance)");
  boundary->add_option("--set", set_text, "Comma-separated 1-based vertices")->required();

  BetaOptions bo;
  auto* beta = app.add_subcommand("beta-c", "Convex independence number with a witness");
  beta->add_option("--solver", bo.solver, "auto|oracle|path|cycle|tree|cograph|permutation");
  beta->add_option("--mode", bo.mode, "Permutation DP check: state|witness|oracle-check");

  auto* cara = app.add_subcommand("caratheodory", "Caratheodory number by exhaustive search");

  std::string kind;
  std::vector<int64_t> params;
  auto* gen = app.add_subcommand("gen", "Generate a graph or diagram");
  gen->add_option("kind", kind, "path|cycle|star|ladder|spider|random-perm|random-cograph|random-tree")->required();
  gen->add_option("params", params, "Sizes (spider: legs length)");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Run an oracle-equivalence suite");
  validate->add_option("suite", va.suite, "Suite name")->required();
  validate->add_option("--max-n", va.max_n, "Largest instance size");
  validate->add_option("--samples", va.samples, "Random instances per size");
  validate->add_option("--threads", va.threads, "Worker threads (0 = all cores)");
  validate->add_option("--fixture-dir", va.fixture_dir, "Where counterexamples are written");

  std::string bench_kind;
  std::vector<int64_t> sizes;
  auto* bench = app.add_subcommand("bench", "Time beta-c on generated instances");
  bench->add_option("kind", bench_kind, "Generator kind")->required();
  bench->add_option("sizes", sizes, "Comma-separated sizes")->required()->delimiter(',');
  bench->add_option("--solver", bo.solver, "Solver");
  bench->add_option("--mode", bo.mode, "Permutation DP check mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDispatch;
  }

  try {
    if (*hull) return cmd_hull(gl, set_text);
    if (*check) return cmd_check(gl, set_text);
    if (*boundary) return cmd_boundary(gl, set_text);
    if (*beta) return cmd_beta_c(gl, bo);
    if (*cara) return cmd_caratheodory(gl);
    if (*gen) return cmd_gen(gl, kind, params);
    if (*validate) return cmd_validate(gl, va);
    if (*bench) return cmd_bench(gl, bench_kind, sizes, bo);
  } catch (const Failure& f) {
    if (gl.json)
      std::cout << json{{"error", f.message}, {"exit_code", f.code}}.dump() << "\n";
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
