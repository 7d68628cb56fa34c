#include "p3c/permutation.hpp"

#include <algorithm>
#include <map>

#include "p3c/convexity.hpp"

namespace p3c {

DiagramComponent DiagramComponent::single(const PermutationDiagram& d, Vertex v) {
  DiagramComponent c;
  c.vertices = {v, -1};
  c.count = 1;
  c.min_top = c.max_top = d.top(v);
  c.min_bottom = c.max_bottom = d.bottom(v);
  return c;
}

DiagramComponent DiagramComponent::pair(const PermutationDiagram& d, Vertex u, Vertex v) {
  if (!d.crosses(u, v)) throw Error(ErrorCode::argument, "component pair must cross");
  DiagramComponent c;
  c.vertices = {std::min(u, v), std::max(u, v)};
  c.count = 2;
  c.min_top = std::min(d.top(u), d.top(v));
  c.max_top = std::max(d.top(u), d.top(v));
  c.min_bottom = std::min(d.bottom(u), d.bottom(v));
  c.max_bottom = std::max(d.bottom(u), d.bottom(v));
  return c;
}

std::optional<Vertex> WitnessTriple::y_single() const {
  if (singles.empty()) return std::nullopt;
  return singles.back().y;
}

std::optional<Edge> WitnessTriple::y_pair() const {
  if (pairs.empty()) return std::nullopt;
  return Edge{pairs.back().y1, pairs.back().y2};
}

std::vector<DiagramComponent> enumerate_components(const PermutationDiagram& d) {
  std::vector<DiagramComponent> out;
  for (Vertex v = 0; v < d.size(); ++v) out.push_back(DiagramComponent::single(d, v));
  for (Vertex u = 0; u < d.size(); ++u)
    for (Vertex v = u + 1; v < d.size(); ++v)
      if (d.crosses(u, v)) out.push_back(DiagramComponent::pair(d, u, v));
  std::stable_sort(out.begin(), out.end(), [](const DiagramComponent& a, const DiagramComponent& b) {
    if (a.max_top != b.max_top) return a.max_top < b.max_top;
    if (a.max_bottom != b.max_bottom) return a.max_bottom < b.max_bottom;
    return a.count < b.count;
  });
  return out;
}

bool is_right_of(const DiagramComponent& x, const DiagramComponent& l) {
  return x.min_top > l.max_top && x.min_bottom > l.max_bottom;
}

bool left_of_border(const PermutationDiagram& d, Vertex v, Border b) {
  return d.top(v) < b.top && d.bottom(v) < b.bottom;
}

Border compute_border(const PermutationDiagram& d, const VertexSet& hull) {
  if (hull.empty()) throw Error(ErrorCode::argument, "border of an empty hull");
  Border b{-1, -1};
  for (Vertex v : hull) {
    b.top = std::max(b.top, d.top(v));
    b.bottom = std::max(b.bottom, d.bottom(v));
  }
  return b;
}

bool membership_by_border(const PermutationDiagram& d, Vertex v, const DiagramComponent& last, Border b) {
  if (!is_right_of(DiagramComponent::single(d, v), last))
    throw Error(ErrorCode::argument, "vertex is not right of the last component");
  // A hull vertex right of L can itself own one border endpoint, so equality counts as inside.
  return d.top(v) <= b.top && d.bottom(v) <= b.bottom;
}

namespace {

struct Candidate {
  Vertex y;
  Side side;
  Vertex rank;  // endpoint position beyond L on its side
};

class Engine {
 public:
  Engine(const PermutationDiagram& d, const Graph& g) : d_(d), g_(g), c_(g) {}

  // Neighbours of L with exactly one endpoint past L's rightmost endpoints.
  std::vector<Candidate> interface(const DiagramComponent& l) const {
    std::vector<Candidate> out;
    for (Vertex m : l.members())
      for (Vertex v : g_.neighbors(m)) {
        if (l.contains(v)) continue;
        if (d_.top(v) > l.max_top && d_.bottom(v) < l.max_bottom)
          out.push_back({v, Side::top, d_.top(v)});
        else if (d_.top(v) < l.max_top && d_.bottom(v) > l.max_bottom)
          out.push_back({v, Side::bottom, d_.bottom(v)});
      }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
      return std::tie(a.side, a.rank) > std::tie(b.side, b.rank);
    });
    out.erase(std::unique(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.y == b.y; }),
              out.end());
    return out;
  }

  WitnessTriple witnesses(const VertexSet& s, const DiagramComponent& l) {
    WitnessTriple w;
    const auto iface = interface(l);
    if (iface.empty()) return w;
    for (Vertex u : s) {
      const bool in_last = l.contains(u);
      auto& singles = in_last ? w.last_singles : w.singles;
      auto& pairs = in_last ? w.last_pairs : w.pairs;

      c_.reset();
      for (Vertex v : s)
        if (v != u) c_.add(v);
      const auto base = c_.save();
      std::vector<Vertex> support;
      if (!in_last)
        for (Vertex v : c_.members())
          if (right_world(l, v)) support.push_back(v);
      std::sort(support.begin(), support.end());

      struct Open {
        Candidate cand;
        int need;
        Closure::Snapshot hull;
      };
      std::vector<Open> open;
      for (const auto& cand : iface) {
        if (c_.active(cand.y)) continue;
        int need = 2 - c_.count(cand.y);
        c_.restore(base);
        if (!c_.add(cand.y, u)) {
          SingleWitness sw{cand.side, need, cand.y, support};
          auto it = std::find_if(singles.begin(), singles.end(), [&](const SingleWitness& o) {
            return o.side == sw.side && o.need == sw.need && o.support == sw.support;
          });
          if (it == singles.end())
            singles.push_back(std::move(sw));
          else if (rank(it->y, it->side) < cand.rank)
            *it = std::move(sw);
        } else {
          open.push_back({cand, need, c_.save()});
        }
        c_.restore(base);
      }

      // Pairs in decreasing (rank a, rank b) order per class, so the first hit is the keeper.
      for (std::size_t i = 0; i < open.size(); ++i)
        for (std::size_t j = i + 1; j < open.size(); ++j) {
          const auto& a = open[i];
          const auto& b = open[j];
          PairWitness pw{a.cand.side, a.need, b.cand.side, b.need, a.cand.y, b.cand.y, support};
          auto same_class = [&](const PairWitness& o) {
            return o.side1 == pw.side1 && o.need1 == pw.need1 && o.side2 == pw.side2 && o.need2 == pw.need2 &&
                   o.support == pw.support;
          };
          auto it = std::find_if(pairs.begin(), pairs.end(), same_class);
          if (it != pairs.end() &&
              std::pair(rank(it->y1, it->side1), rank(it->y2, it->side2)) >= std::pair(a.cand.rank, b.cand.rank))
            continue;
          if (a.hull.active[static_cast<std::size_t>(b.cand.y)] || b.hull.active[static_cast<std::size_t>(a.cand.y)])
            continue;
          c_.restore(a.hull);
          if (c_.add(b.cand.y, u)) continue;
          if (it != pairs.end())
            *it = pw;
          else
            pairs.push_back(pw);
        }
    }
    std::sort(w.singles.begin(), w.singles.end());
    std::sort(w.pairs.begin(), w.pairs.end());
    std::sort(w.last_singles.begin(), w.last_singles.end());
    std::sort(w.last_pairs.begin(), w.last_pairs.end());
    return w;
  }

  // z not in sigma(s - z).
  bool survives(const VertexSet& s, Vertex z) {
    c_.reset();
    for (Vertex v : s)
      if (v != z && !c_.add(v, z)) return false;
    return true;
  }

  bool independent(const VertexSet& s) {
    return std::all_of(s.begin(), s.end(), [&](Vertex z) { return survives(s, z); });
  }

  VertexSet hull_of(const VertexSet& s) {
    c_.reset();
    c_.add_all(s.values());
    return VertexSet(c_.members());
  }

  bool feasible(const DpState& st, const DiagramComponent& x) {
    for (Vertex v : x.members())
      if (membership_by_border(d_, v, st.last, st.border)) return false;
    VertexSet star = st.representative;
    for (Vertex v : x.members()) star = star.with(v);
    return std::all_of(x.members().begin(), x.members().end(), [&](Vertex v) { return survives(star, v); });
  }

  bool state_accepts(const DpState& st, const DiagramComponent& x) {
    if (!feasible(st, x)) return false;
    const DiagramComponent& l = st.last;
    VertexSet star = st.representative;
    for (Vertex v : x.members()) star = star.with(v);
    for (Vertex z : l.members())
      if (!survives(star, z)) return false;
    if (st.witnesses.singles.empty() && st.witnesses.pairs.empty()) return true;

    for (const auto& sw : st.witnesses.singles)
      if (right_closure(l, x, sw.support)[static_cast<std::size_t>(sw.y)]) return false;
    for (const auto& pw : st.witnesses.pairs) {
      auto act = right_closure(l, x, pw.support);
      if (act[static_cast<std::size_t>(pw.y1)] && act[static_cast<std::size_t>(pw.y2)]) return false;
    }
    return true;
  }

  // Vertices with an endpoint past L on some line: the interface N(L) part and everything right of L.
  bool right_world(const DiagramComponent& l, Vertex v) const {
    if (l.contains(v)) return false;
    bool top = d_.top(v) > l.max_top, bottom = d_.bottom(v) > l.max_bottom;
    if (top && bottom) return true;
    if (!top && !bottom) return false;
    for (Vertex m : l.members())
      if (d_.crosses(m, v)) return true;
    return false;
  }

  // Closure of support + X inside the right world: interface vertices already hold one pushed
  // neighbour (in L), everything further right needs two.
  std::vector<std::uint8_t> right_closure(const DiagramComponent& l, const DiagramComponent& x,
                                          const std::vector<Vertex>& support) {
    const auto n = static_cast<std::size_t>(d_.size());
    std::vector<std::uint8_t> kind(n, 0), act(n, 0), cnt(n, 0);
    for (const auto& c : interface(l)) kind[static_cast<std::size_t>(c.y)] = 1;
    for (Vertex v = 0; v < d_.size(); ++v)
      if (d_.top(v) > l.max_top && d_.bottom(v) > l.max_bottom) kind[static_cast<std::size_t>(v)] = 2;
    std::vector<Vertex> queue;
    auto seed = [&](Vertex v) {
      if (act[static_cast<std::size_t>(v)]) return;
      act[static_cast<std::size_t>(v)] = 1;
      queue.push_back(v);
    };
    for (Vertex v : support) seed(v);
    for (Vertex v : x.members()) seed(v);
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g_.neighbors(queue[head])) {
        auto wi = static_cast<std::size_t>(w);
        if (!kind[wi] || act[wi]) continue;
        if (++cnt[wi] >= kind[wi]) {
          act[wi] = 1;
          queue.push_back(w);
        }
      }
    return act;
  }

  DpState make_state(std::size_t index, const DiagramComponent& last, VertexSet rep) {
    DpState st;
    st.last_index = index;
    st.last = last;
    st.hull = hull_of(rep);
    st.border = compute_border(d_, st.hull);
    st.witnesses = witnesses(rep, last);
    st.best_size = rep.size();
    st.representative = std::move(rep);
    return st;
  }

 private:
  Vertex rank(Vertex y, Side side) const { return side == Side::top ? d_.top(y) : d_.bottom(y); }

  const PermutationDiagram& d_;
  const Graph& g_;
  Closure c_;
};

VertexSet members_of(const DiagramComponent& c) {
  return VertexSet(std::vector<Vertex>(c.members().begin(), c.members().end()));
}

void check_diagram(const PermutationDiagram& d, const Graph& g) {
  if (g.order() != d.size()) throw Error(ErrorCode::argument, "graph and diagram sizes differ");
}

}  // namespace

WitnessTriple witness_triple(const PermutationDiagram& d, const Graph& g, const VertexSet& s,
                             const DiagramComponent& last) {
  check_diagram(d, g);
  s.check_range(g.order());
  return Engine(d, g).witnesses(s, last);
}

DpState initial_state(const PermutationDiagram& d, const Graph& g,
                      const std::vector<DiagramComponent>& comps, std::size_t index) {
  check_diagram(d, g);
  return Engine(d, g).make_state(index, comps.at(index), members_of(comps.at(index)));
}

bool feasible_new_component(const PermutationDiagram& d, const Graph& g, const DpState& state,
                            const DiagramComponent& x) {
  check_diagram(d, g);
  return Engine(d, g).feasible(state, x);
}

bool state_mode_accepts(const PermutationDiagram& d, const Graph& g, const DpState& state,
                        const DiagramComponent& x) {
  check_diagram(d, g);
  return Engine(d, g).state_accepts(state, x);
}

std::optional<DpState> extend_state(const PermutationDiagram& d, const Graph& g, const DpState& state,
                                    std::size_t x_index, const std::vector<DiagramComponent>& comps,
                                    DpMode mode) {
  check_diagram(d, g);
  const auto& x = comps.at(x_index);
  if (!is_right_of(x, state.last)) throw Error(ErrorCode::argument, "component is not right of last");
  Engine e(d, g);
  VertexSet star = state.representative.unite(members_of(x));
  bool ok = mode == DpMode::state ? e.state_accepts(state, x) : e.independent(star);
  if (mode == DpMode::oracle_check && ok != e.state_accepts(state, x))
    throw Error(ErrorCode::verification, "state mode and witness mode disagree");
  if (!ok) return std::nullopt;
  DpState next = e.make_state(x_index, x, std::move(star));
  next.best_size = state.best_size + static_cast<std::size_t>(x.count);
  return next;
}

PermutationResult beta_c_permutation(const PermutationDiagram& d, DpMode mode, const PermutationOptions& options) {
  const Graph g = diagram_to_graph(d);
  if (mode == DpMode::oracle_check && d.size() > std::min(options.oracle_bound, kOracleHardLimit))
    throw Error(ErrorCode::size_refusal, "oracle-check refuses n=" + std::to_string(d.size()));
  PermutationResult r;
  if (d.size() == 0) return r;

  const auto comps = enumerate_components(d);
  Engine e(d, g);
  using Key = std::pair<Border, WitnessTriple>;
  std::vector<std::map<Key, DpState>> states(comps.size());

  auto offer = [&](DpState st) {
    auto& bucket = states[st.last_index];
    Key key{st.border, st.witnesses};
    auto it = bucket.find(key);
    if (it == bucket.end()) {
      bucket.emplace(std::move(key), std::move(st));
      ++r.states;
    } else if (st.best_size > it->second.best_size ||
               (st.best_size == it->second.best_size && st.representative < it->second.representative)) {
      it->second = std::move(st);
    }
  };

  for (std::size_t i = 0; i < comps.size(); ++i) offer(e.make_state(i, comps[i], members_of(comps[i])));

  std::size_t best = 0;
  VertexSet best_set;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (const auto& [key, st] : states[i]) {
      if (st.best_size > best || (st.best_size == best && st.representative < best_set)) {
        best = st.best_size;
        best_set = st.representative;
      }
      for (std::size_t j = i + 1; j < comps.size(); ++j) {
        const auto& x = comps[j];
        if (!is_right_of(x, st.last)) continue;
        ++r.explored;
        bool ok;
        if (mode == DpMode::state) {
          ok = e.state_accepts(st, x);
        } else {
          // x in sigma(S) already captures x; only then is the direct check needed.
          ok = std::none_of(x.members().begin(), x.members().end(), [&](Vertex v) { return st.hull.contains(v); }) &&
               e.independent(st.representative.unite(members_of(x)));
          if (mode == DpMode::oracle_check && ok != e.state_accepts(st, x)) ++r.mode_disagreements;
        }
        if (!ok) continue;
        DpState next = e.make_state(j, x, st.representative.unite(members_of(x)));
        offer(std::move(next));
      }
    }
    states[i].clear();
  }
  r.value = static_cast<std::int64_t>(best);
  r.witness = std::move(best_set);

  if (mode == DpMode::oracle_check) {
    auto o = beta_c_oracle(g, {options.oracle_bound, std::nullopt});
    if (o.value != r.value)
      throw Error(ErrorCode::verification, "permutation DP value " + std::to_string(r.value) +
                                               " differs from oracle " + std::to_string(o.value));
  }
  return r;
}

}  // namespace p3c
