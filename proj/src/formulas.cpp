#include "p3c/formulas.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>

namespace p3c {

int beta_c_path(int n) {
  if (n < 1) throw Error(ErrorCode::argument, "path needs n >= 1");
  return 2 * (n / 3) + n % 3;
}

int beta_c_cycle(int n) {
  if (n < 3) throw Error(ErrorCode::argument, "cycle needs n >= 3");
  return beta_c_path(n - 1);
}

namespace {

// Keep, keep, skip along the sequence.
VertexSet keep_two_skip_one(const std::vector<Vertex>& seq, std::size_t len) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < len; ++i)
    if (i % 3 != 2) out.push_back(seq[i]);
  return VertexSet(std::move(out));
}

void require_tree(const Graph& t) {
  if (!is_tree(t)) throw Error(ErrorCode::argument, "graph is not a tree");
}

}  // namespace

VertexSet path_witness(const Graph& path) {
  auto seq = path_order(path);
  return keep_two_skip_one(seq, seq.size());
}

VertexSet cycle_witness(const Graph& cycle) {
  auto seq = cycle_order(cycle);
  return keep_two_skip_one(seq, seq.size() - 1);
}

bool is_leafy(const Graph& t) {
  require_tree(t);
  int deg2 = 0;
  for (Vertex v = 0; v < t.order(); ++v) deg2 += t.degree(v) == 2;
  return deg2 <= 1;
}

int beta_c_leafy(const Graph& t) {
  if (!is_leafy(t)) throw Error(ErrorCode::argument, "tree is not leafy");
  if (t.order() == 1) return 1;
  int leaves = 0;
  for (Vertex v = 0; v < t.order(); ++v) leaves += t.degree(v) == 1;
  return leaves;
}

TreeDecomposition tree_decompose(const Graph& t) {
  require_tree(t);
  const Vertex n = t.order();
  TreeDecomposition dec;
  auto branch = [&](Vertex v) { return t.degree(v) >= 3; };

  if (n <= 2) {
    dec.leafy_trees.push_back(VertexSet::range(n));
    return dec;
  }
  bool any_branch = false;
  for (Vertex v = 0; v < n; ++v) any_branch |= branch(v);
  if (!any_branch) {
    dec.paths.push_back(path_order(t));
    dec.shared.emplace_back(false, false);
    return dec;
  }

  // Provisional trees: components of the branch vertices.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (!branch(s) || owner[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    owner[static_cast<std::size_t>(s)] = count;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t.neighbors(v))
        if (branch(w) && owner[static_cast<std::size_t>(w)] < 0) {
          owner[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < n; ++v)
    if (owner[static_cast<std::size_t>(v)] >= 0) members[static_cast<std::size_t>(owner[static_cast<std::size_t>(v)])].push_back(v);

  struct Chain {
    std::vector<Vertex> body;
    int tree;
  };
  std::vector<std::vector<Chain>> pendant(static_cast<std::size_t>(count));

  for (Vertex b = 0; b < n; ++b) {
    if (!branch(b)) continue;
    for (Vertex w : t.neighbors(b)) {
      if (branch(w)) continue;
      std::vector<Vertex> body{w};
      Vertex prev = b, cur = w, end = -1;
      while (true) {
        Vertex next = -1;
        for (Vertex x : t.neighbors(cur))
          if (x != prev) next = x;
        if (next < 0) break;
        if (branch(next)) {
          end = next;
          break;
        }
        body.push_back(next);
        prev = cur;
        cur = next;
      }
      int fb = owner[static_cast<std::size_t>(b)];
      if (end < 0) {
        members[static_cast<std::size_t>(fb)].push_back(w);
        pendant[static_cast<std::size_t>(fb)].push_back({body, fb});
        continue;
      }
      if (end < b) continue;  // handled from the other side
      int fe = owner[static_cast<std::size_t>(end)];
      members[static_cast<std::size_t>(fb)].push_back(body.front());
      owner[static_cast<std::size_t>(body.front())] = fb;
      if (body.size() == 1) {
        dec.paths.push_back({body.front(), end});
      } else {
        members[static_cast<std::size_t>(fe)].push_back(body.back());
        owner[static_cast<std::size_t>(body.back())] = fe;
        dec.paths.push_back(body);
      }
      dec.shared.emplace_back(true, true);
    }
  }

  auto degree2_count = [&](const std::vector<Vertex>& f) {
    VertexSet fs{std::vector<Vertex>(f)};
    int k = 0;
    for (Vertex v : fs) {
      int d = 0;
      for (Vertex w : t.neighbors(v)) d += fs.contains(w);
      k += d == 2;
    }
    return k;
  };

  for (int f = 0; f < count; ++f) {
    auto& chains = pendant[static_cast<std::size_t>(f)];
    // Longest chain first, then smallest far endpoint.
    std::sort(chains.begin(), chains.end(), [](const Chain& a, const Chain& b) {
      if (a.body.size() != b.body.size()) return a.body.size() > b.body.size();
      return a.body.back() < b.body.back();
    });
    bool absorbed = false;
    for (auto& c : chains) {
      if (c.body.size() < 2) continue;
      std::size_t start = 0;
      if (!absorbed) {
        auto trial = members[static_cast<std::size_t>(f)];
        trial.push_back(c.body[1]);
        if (degree2_count(trial) <= 1) {
          members[static_cast<std::size_t>(f)] = std::move(trial);
          absorbed = true;
          start = 1;
        }
      }
      std::vector<Vertex> rest(c.body.begin() + static_cast<std::ptrdiff_t>(start), c.body.end());
      if (rest.size() >= 2) {
        dec.paths.push_back(std::move(rest));
        dec.shared.emplace_back(true, false);
      }
    }
  }
  for (auto& f : members) dec.leafy_trees.emplace_back(std::move(f));
  return dec;
}

// Rooted DP. For x in S, x is captured by S - x exactly when at least two neighbours w are
// "activated toward x": w in S, or w has >= 2 activated neighbours on its own side.
// State per vertex v (with parent p): in = [v in S], up = A(v -> p), d = A(p -> v).
// A set is independent iff no member has two activated neighbours.
TreeSolution beta_c_tree(const Graph& t) {
  require_tree(t);
  const Vertex n = t.order();
  constexpr int kNeg = std::numeric_limits<int>::min() / 4;

  std::vector<Vertex> order{0}, parent(static_cast<std::size_t>(n), -1);
  order.reserve(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (w != parent[static_cast<std::size_t>(order[i])]) {
        parent[static_cast<std::size_t>(w)] = order[i];
        order.push_back(w);
      }

  using Table = std::array<std::array<std::array<int, 2>, 2>, 2>;  // [in][up][d]
  using Count = std::array<int, 4>;                                 // capped up-children
  std::vector<Table> best(static_cast<std::size_t>(n));
  std::vector<std::array<std::array<std::array<int, 2>, 2>, 2>> chosen_k(static_cast<std::size_t>(n));
  // prefix[v][in][d][K][i] = knapsack row after i children.
  std::vector<std::array<std::array<std::array<std::vector<Count>, 4>, 2>, 2>> prefix(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> kids(static_cast<std::size_t>(n));

  auto child_down = [](int in, int k, int upc, int d) { return in ? 1 : int(k - upc + d >= 2); };
  auto child_val = [&](Vertex c, int upc, int down) {
    const auto& b = best[static_cast<std::size_t>(c)];
    return std::max(b[0][upc][down], b[1][upc][down]);
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto vi = static_cast<std::size_t>(v);
    for (Vertex w : t.neighbors(v))
      if (w != parent[vi]) kids[vi].push_back(w);
    Table tab;
    for (auto& a : tab)
      for (auto& b : a) b.fill(kNeg);
    for (int in = 0; in < 2; ++in)
      for (int d = 0; d < 2; ++d)
        for (int k = 0; k < 4; ++k) {
          auto& rows = prefix[vi][static_cast<std::size_t>(in)][static_cast<std::size_t>(d)][static_cast<std::size_t>(k)];
          rows.assign(1, Count{in, kNeg, kNeg, kNeg});
          for (Vertex c : kids[vi]) {
            Count next{kNeg, kNeg, kNeg, kNeg};
            const Count& cur = rows.back();
            for (int cnt = 0; cnt < 4; ++cnt) {
              if (cur[static_cast<std::size_t>(cnt)] == kNeg) continue;
              for (int upc = 0; upc < 2; ++upc) {
                int val = child_val(c, upc, child_down(in, k, upc, d));
                if (val == kNeg) continue;
                auto k2 = static_cast<std::size_t>(std::min(cnt + upc, 3));
                next[k2] = std::max(next[k2], cur[static_cast<std::size_t>(cnt)] + val);
              }
            }
            rows.push_back(next);
          }
          int got = rows.back()[static_cast<std::size_t>(k)];
          if (got == kNeg) continue;
          if (in && k + d > 1) continue;
          int up = (in || k >= 2) ? 1 : 0;
          if (got > tab[static_cast<std::size_t>(in)][static_cast<std::size_t>(up)][static_cast<std::size_t>(d)]) {
            tab[static_cast<std::size_t>(in)][static_cast<std::size_t>(up)][static_cast<std::size_t>(d)] = got;
            chosen_k[vi][static_cast<std::size_t>(in)][static_cast<std::size_t>(up)][static_cast<std::size_t>(d)] = k;
          }
        }
    best[vi] = tab;
  }

  // Backtrack from the root (no parent, so d = 0).
  struct Frame {
    Vertex v;
    int in, up, d;
  };
  Frame root{0, 0, 0, 0};
  int top = kNeg;
  for (int in = 0; in < 2; ++in)
    for (int up = 0; up < 2; ++up)
      if (best[0][static_cast<std::size_t>(in)][static_cast<std::size_t>(up)][0] > top) {
        top = best[0][static_cast<std::size_t>(in)][static_cast<std::size_t>(up)][0];
        root = {0, in, up, 0};
      }
  std::vector<Vertex> chosen;
  std::vector<Frame> stack{root};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    auto vi = static_cast<std::size_t>(f.v);
    if (f.in) chosen.push_back(f.v);
    int k = chosen_k[vi][static_cast<std::size_t>(f.in)][static_cast<std::size_t>(f.up)][static_cast<std::size_t>(f.d)];
    const auto& rows = prefix[vi][static_cast<std::size_t>(f.in)][static_cast<std::size_t>(f.d)][static_cast<std::size_t>(k)];
    int cnt = k;
    for (std::size_t i = kids[vi].size(); i-- > 0;) {
      Vertex c = kids[vi][i];
      int target = rows[i + 1][static_cast<std::size_t>(cnt)];
      bool done = false;
      for (int prev = 0; prev < 4 && !done; ++prev) {
        if (rows[i][static_cast<std::size_t>(prev)] == kNeg) continue;
        for (int upc = 0; upc < 2 && !done; ++upc) {
          if (std::min(prev + upc, 3) != cnt) continue;
          int down = child_down(f.in, k, upc, f.d);
          for (int ic = 0; ic < 2 && !done; ++ic) {
            int val = best[static_cast<std::size_t>(c)][static_cast<std::size_t>(ic)][static_cast<std::size_t>(upc)][static_cast<std::size_t>(down)];
            if (val == kNeg || rows[i][static_cast<std::size_t>(prev)] + val != target) continue;
            stack.push_back({c, ic, upc, down});
            cnt = prev;
            done = true;
          }
        }
      }
    }
  }
  return {top, VertexSet(std::move(chosen))};
}

}  // namespace p3c
