#include "p3c/validate.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>

#include "p3c/cograph.hpp"
#include "p3c/convexity.hpp"
#include "p3c/formulas.hpp"
#include "p3c/generators.hpp"
#include "p3c/oracle.hpp"
#include "p3c/permutation.hpp"
#include "rng.hpp"

namespace p3c {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;   // shown on failure
  std::string fixture;  // instance in a graph-core text format
};

struct Suite {
  std::uint64_t count = 0;
  std::function<Outcome(std::uint64_t)> check;
};

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

Outcome compare(std::int64_t got, std::int64_t want, const std::string& fixture) {
  if (got == want) return {};
  return {false, "got " + std::to_string(got) + ", oracle " + std::to_string(want), fixture};
}

std::vector<Vertex> unrank(std::uint64_t index, Vertex n) {
  std::vector<Vertex> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Vertex> out;
  std::uint64_t fact = 1;
  for (Vertex i = 2; i < n; ++i) fact *= static_cast<std::uint64_t>(i);
  for (Vertex k = n; k >= 1; --k) {
    auto pos = index / fact;
    index %= fact;
    out.push_back(pool[pos]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pos));
    if (k > 1) fact /= static_cast<std::uint64_t>(k - 1);
  }
  return out;
}

Outcome check_permutation(const PermutationDiagram& d) {
  const Graph g = diagram_to_graph(d);
  const std::string fx = format_permutation(d);
  auto o = beta_c_oracle(g).value;
  auto w = beta_c_permutation(d, DpMode::witness);
  auto s = beta_c_permutation(d, DpMode::state);
  if (w.value != o) return {false, "witness mode " + std::to_string(w.value) + ", oracle " + std::to_string(o), fx};
  if (s.value != w.value)
    return {false, "state mode " + std::to_string(s.value) + ", witness mode " + std::to_string(w.value), fx};
  if (!is_convexly_independent(g, s.witness).independent)
    return {false, "state mode returned dependent set " + set_text(s.witness), fx};
  return {};
}

Suite make_suite(const ValidateOptions& o) {
  const std::string& name = o.suite;
  const std::uint64_t seed = o.seed;
  auto pick = [](int v, int fallback) { return v > 0 ? v : fallback; };

  if (name == "path") {
    int max_n = pick(o.max_n, 12);
    return {static_cast<std::uint64_t>(max_n), [](std::uint64_t i) {
              auto n = static_cast<Vertex>(i + 1);
              Graph g = gen_path(n);
              return compare(beta_c_path(n), beta_c_oracle(g).value, format_edge_list(g));
            }};
  }
  if (name == "cycle") {
    int max_n = pick(o.max_n, 12);
    return {static_cast<std::uint64_t>(std::max(0, max_n - 2)), [](std::uint64_t i) {
              auto n = static_cast<Vertex>(i + 3);
              Graph g = gen_cycle(n);
              return compare(beta_c_cycle(n), beta_c_oracle(g).value, format_edge_list(g));
            }};
  }
  if (name == "leafy" || name == "tree") {
    int max_n = pick(o.max_n, 8);
    auto trees = std::make_shared<std::vector<Graph>>();
    for (Vertex n = 1; n <= max_n; ++n)
      for (auto& t : all_trees(n)) trees->push_back(std::move(t));
    const bool leafy = name == "leafy";
    std::uint64_t samples = leafy ? 0 : static_cast<std::uint64_t>(pick(o.samples, 2000));
    return {trees->size() + samples, [trees, leafy, seed](std::uint64_t i) -> Outcome {
              Graph t = i < trees->size() ? (*trees)[i]
                                          : gen_random_tree(static_cast<Vertex>(1 + mix(seed, i) % 11), mix(seed, i) >> 8);
              if (leafy) {
                if (!is_leafy(t)) return {};
                return compare(beta_c_leafy(t), beta_c_oracle(t).value, format_edge_list(t));
              }
              auto r = beta_c_tree(t);
              if (!is_convexly_independent(t, r.witness).independent || static_cast<int>(r.witness.size()) != r.value)
                return {false, "tree witness invalid " + set_text(r.witness), format_edge_list(t)};
              return compare(r.value, beta_c_oracle(t).value, format_edge_list(t));
            }};
  }
  if (name == "cograph") {
    int max_n = pick(o.max_n, 14);
    return {static_cast<std::uint64_t>(pick(o.samples, 200)), [seed, max_n](std::uint64_t i) {
              auto n = static_cast<Vertex>(1 + mix(seed, i) % static_cast<std::uint64_t>(max_n));
              auto c = gen_random_cograph(n, mix(seed, i) >> 8);
              auto r = beta_c_cograph(build_cotree(c.graph));
              if (!is_convexly_independent(c.graph, r.witness).independent)
                return Outcome{false, "cograph witness invalid " + set_text(r.witness), format_edge_list(c.graph)};
              return compare(r.value, beta_c_oracle(c.graph).value, format_edge_list(c.graph));
            }};
  }
  if (name == "permutation") {
    int max_n = pick(o.max_n, 7);
    if (max_n <= 8) {
      std::uint64_t total = 1;
      for (int k = 2; k <= max_n; ++k) total *= static_cast<std::uint64_t>(k);
      return {total, [max_n](std::uint64_t i) {
                return check_permutation(PermutationDiagram(unrank(i, static_cast<Vertex>(max_n))));
              }};
    }
    auto per = static_cast<std::uint64_t>(pick(o.samples, 500));
    auto sizes = static_cast<std::uint64_t>(max_n - 7);
    return {per * sizes, [seed, per](std::uint64_t i) {
              auto n = static_cast<Vertex>(8 + i / per);
              return check_permutation(gen_random_permutation(n, mix(seed, i)));
            }};
  }
  if (name == "hull") {
    int max_n = pick(o.max_n, 12);
    return {static_cast<std::uint64_t>(pick(o.samples, 1000)), [seed, max_n](std::uint64_t i) -> Outcome {
              detail::Rng rng(mix(seed, i));
              auto n = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
              Graph g = gen_random_graph(n, 0.1 + 0.5 * rng.unit(), rng.next());
              std::vector<Vertex> a, b;
              for (Vertex v = 0; v < n; ++v) {
                bool in_a = rng.below(4) == 0;
                if (in_a) a.push_back(v);
                if (in_a || rng.below(4) == 0) b.push_back(v);
              }
              VertexSet sa(a), sb(b);
              std::string fx = format_edge_list(g) + "# set " + set_text(sa) + "\n";
              VertexSet ha = hull(g, sa).hull;
              if (!sa.subset_of(ha)) return {false, "not extensive", fx};
              if (hull(g, ha).hull != ha) return {false, "not idempotent", fx};
              if (!ha.subset_of(hull(g, sb).hull)) return {false, "not monotone", fx};
              if (!is_convex(g, ha)) return {false, "hull not convex", fx};
              if (hull(g, sa, QueueOrder::reverse).hull != ha || hull(g, sa, QueueOrder::shuffled, rng.next()).hull != ha)
                return {false, "depends on queue order", fx};
              return {};
            }};
  }
  if (name == "order") {
    int max_n = pick(o.max_n, 10);
    auto graphs = static_cast<std::uint64_t>(pick(o.samples, 200));
    return {graphs + 500, [seed, max_n, graphs](std::uint64_t i) -> Outcome {
              detail::Rng rng(mix(seed, i));
              auto n = static_cast<Vertex>(1 + rng.below(static_cast<std::uint64_t>(max_n)));
              Graph g = gen_random_graph(n, 0.1 + 0.6 * rng.unit(), rng.next());
              if (i < graphs) {
                auto c = caratheodory_oracle(g).value, b = beta_c_oracle(g).value;
                if (c > b)
                  return {false, "Caratheodory " + std::to_string(c) + " > beta_c " + std::to_string(b), format_edge_list(g)};
                return {};
              }
              // Greedy random 2-packing.
              std::vector<Vertex> order(static_cast<std::size_t>(n));
              std::iota(order.begin(), order.end(), 0);
              rng.shuffle(order);
              VertexSet s;
              for (Vertex v : order)
                if (is_two_packing(g, s.with(v))) s = s.with(v);
              std::string fx = format_edge_list(g) + "# set " + set_text(s) + "\n";
              if (!is_convexly_independent(g, s).independent) return {false, "2-packing not independent", fx};
              if (hull(g, s).hull != s) return {false, "2-packing not convex", fx};
              return {};
            }};
  }
  throw Error(ErrorCode::dispatch, "unknown validation suite '" + name + "'");
}

}  // namespace

std::string ValidateReport::summary() const {
  return std::to_string(passed) + "/" + std::to_string(total) + (passed == total ? " ok" : " FAILED");
}

std::vector<std::string> validation_suites() {
  return {"path", "cycle", "leafy", "tree", "cograph", "permutation", "hull", "order"};
}

ValidateReport run_validation(const ValidateOptions& options) {
  Suite suite = make_suite(options);
  std::vector<Outcome> results(suite.count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next++) < suite.count;) {
      try {
        results[i] = suite.check(i);
      } catch (const std::exception& e) {
        results[i] = {false, std::string("error: ") + e.what(), {}};
      }
    }
  };
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(suite.count, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ValidateReport report;
  report.suite = options.suite;
  report.total = suite.count;
  for (std::uint64_t i = 0; i < suite.count; ++i) {
    if (results[i].ok) {
      ++report.passed;
      continue;
    }
    report.failures.push_back("#" + std::to_string(i) + ": " + results[i].detail);
    if (!results[i].fixture.empty()) {
      auto path = options.fixture_dir / ("p3c-" + options.suite + "-" + std::to_string(i) + ".txt");
      std::ofstream out(path);
      out << "# " << results[i].detail << "\n" << results[i].fixture;
      if (out) report.fixture_files.push_back(path.string());
    }
  }
  return report;
}

}  // namespace p3c
