#include "deds/fpt.hpp"

#include <algorithm>
#include <chrono>

#include "deds/error.hpp"

namespace deds {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Keeps the smallest candidate, ties broken by the sorted arc list.
void offer(std::optional<std::vector<ArcId>>& best, std::vector<ArcId> cand) {
  normalize_arcs(cand);
  if (!best || cand.size() < best->size() || (cand.size() == best->size() && cand < *best))
    best = std::move(cand);
}

// ---- (1,1) ---------------------------------------------------------------

enum Mark : std::uint8_t { kFree, kPlus, kMinus, kBoth };

bool has_out(Mark m) { return m == kPlus || m == kBoth; }
bool has_in(Mark m) { return m == kMinus || m == kBoth; }

struct Branch11 {
  const Digraph& g;
  int k;
  Fpt11Options opt;
  FptStats& stats;
  std::vector<Mark> mark;
  int weight = 0;  // |V+| + |V-| + 2|V+-|
  std::optional<std::vector<ArcId>> best;

  static int cost(Mark m) { return m == kBoth ? 2 : (m == kFree ? 0 : 1); }

  void set(Vertex v, Mark m) {
    weight += cost(m) - cost(mark[static_cast<std::size_t>(v)]);
    mark[static_cast<std::size_t>(v)] = m;
  }

  Mark at(Vertex v) const { return mark[static_cast<std::size_t>(v)]; }

  bool covered(const Arc& e) const { return has_in(at(e.tail)) || has_out(at(e.head)); }

  void run(int depth) {
    ++stats.nodes;
    if (weight > 2 * k) return;
    stats.max_depth = std::max(stats.max_depth, depth);

    for (const Arc& e : g.arcs()) {
      if (at(e.tail) != kFree || at(e.head) != kFree) continue;
      const auto [u, v] = e;
      auto attempt = [&](std::initializer_list<std::pair<Vertex, Mark>> changes) {
        for (auto [x, m] : changes) set(x, m);
        run(depth + 1);
        for (auto [x, m] : changes) set(x, kFree), (void)m;
      };
      attempt({{v, kPlus}});
      attempt({{v, kBoth}});
      attempt({{u, kMinus}});
      attempt({{u, kBoth}});
      attempt({{u, kPlus}, {v, kMinus}});
      return;
    }

    for (const Arc& e : g.arcs()) {
      bool tail_free = at(e.tail) == kFree, head_free = at(e.head) == kFree;
      if (tail_free == head_free || covered(e)) continue;
      Vertex w = tail_free ? e.tail : e.head;
      for (Mark m : {kPlus, kMinus, kBoth}) {
        set(w, m);
        run(depth + 1);
      }
      set(w, kFree);
      return;
    }

    ++stats.leaves;
    auto sol = opt.completion == Completion11::edge_cover ? complete_edge_cover()
                                                          : complete_requirements();
    if (sol && static_cast<int>(sol->size()) <= k) offer(best, std::move(*sol));
  }

  // Arcs V+ -> V- can only dominate themselves under the guesses.
  std::vector<ArcId> forced() const {
    std::vector<ArcId> f;
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (at(g.arc(a).tail) == kPlus && at(g.arc(a).head) == kMinus) f.push_back(a);
    return f;
  }

  std::optional<std::vector<ArcId>> complete_edge_cover() const {
    auto sol = forced();
    const int n = g.num_vertices();
    std::vector<int> left_id(static_cast<std::size_t>(n), -1), right_id(static_cast<std::size_t>(n), -1);
    int nl = 0, nr = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (has_out(at(v))) left_id[static_cast<std::size_t>(v)] = nl++;
      if (has_in(at(v))) right_id[static_cast<std::size_t>(v)] = nr++;
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<ArcId> edge_arc;
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      int l = left_id[static_cast<std::size_t>(g.arc(a).tail)];
      int r = right_id[static_cast<std::size_t>(g.arc(a).head)];
      if (l < 0 || r < 0) continue;
      edges.emplace_back(l, r);
      edge_arc.push_back(a);
    }
    try {
      for (auto i : min_edge_cover_bipartite(nl, nr, edges)) sol.push_back(edge_arc[i]);
    } catch (const InputError&) {
      return std::nullopt;  // some guessed degree cannot be realised
    }
    return sol;
  }

  std::optional<std::vector<ArcId>> complete_requirements() const {
    auto sol = forced();
    const int n = g.num_vertices();
    std::vector<char> out_met(static_cast<std::size_t>(n), 0), in_met(static_cast<std::size_t>(n), 0);
    for (ArcId a : sol) {
      out_met[static_cast<std::size_t>(g.arc(a).tail)] = 1;
      in_met[static_cast<std::size_t>(g.arc(a).head)] = 1;
    }
    std::vector<int> left_id(static_cast<std::size_t>(n), -1), right_id(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> left, right;
    for (Vertex v = 0; v < n; ++v) {
      auto vi = static_cast<std::size_t>(v);
      if (has_out(at(v)) && !out_met[vi]) {
        if (g.out_degree(v) == 0) return std::nullopt;
        left_id[vi] = static_cast<int>(left.size());
        left.push_back(v);
      }
      if (has_in(at(v)) && !in_met[vi]) {
        if (g.in_degree(v) == 0) return std::nullopt;
        right_id[vi] = static_cast<int>(right.size());
        right.push_back(v);
      }
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<ArcId> edge_arc;
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      int l = left_id[static_cast<std::size_t>(g.arc(a).tail)];
      int r = right_id[static_cast<std::size_t>(g.arc(a).head)];
      if (l < 0 || r < 0) continue;
      edges.emplace_back(l, r);
      edge_arc.push_back(a);
    }
    auto match = max_bipartite_matching(static_cast<int>(left.size()), static_cast<int>(right.size()), edges);
    std::vector<char> right_done(right.size(), 0);
    for (std::size_t l = 0; l < left.size(); ++l) {
      if (match[l] < 0) {
        sol.push_back(g.out_arcs(left[l]).front());
        continue;
      }
      sol.push_back(edge_arc[static_cast<std::size_t>(match[l])]);
      right_done[static_cast<std::size_t>(edges[static_cast<std::size_t>(match[l])].second)] = 1;
    }
    for (std::size_t r = 0; r < right.size(); ++r)
      if (!right_done[r]) sol.push_back(g.in_arcs(right[r]).front());
    return sol;
  }
};

// ---- (0,1) ---------------------------------------------------------------

enum Status : std::uint8_t { kRest, kZero, kFixed, kOpen };  // V_r, V_0, V+_F, V+_?

struct Branch01 {
  const Digraph& g;
  int k;
  FptStats& stats;
  std::optional<std::vector<ArcId>> best;

  struct State {
    std::vector<Status> st;
    std::vector<char> forced;
    int plus = 0;  // |V+_F| + |V+_?|

    Status at(Vertex v) const { return st[static_cast<std::size_t>(v)]; }
    void set(Vertex v, Status s) {
      bool was = at(v) == kFixed || at(v) == kOpen;
      bool now = s == kFixed || s == kOpen;
      plus += static_cast<int>(now) - static_cast<int>(was);
      st[static_cast<std::size_t>(v)] = s;
    }
  };

  static bool in_plus(Status s) { return s == kFixed || s == kOpen; }

  // Applies the lowest-numbered applicable rule once. Returns false on
  // rejection; sets `changed` when a rule fired.
  bool step(State& s, bool& changed) const {
    changed = false;
    if (s.plus > k) return false;                                    // rule 1
    for (const Arc& e : g.arcs())                                    // rule 2
      if (s.at(e.tail) == kZero && s.at(e.head) == kZero) return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v)                    // rule 3
      if (s.at(v) == kRest && g.in_degree(v) == 0) {
        s.set(v, kZero);
        changed = true;
        return true;
      }
    // Rule 4 also fires for an unforced arc out of V_0 whose head is already
    // in V+_F; otherwise a second V_0 in-neighbour of that head stays uncovered.
    for (ArcId a = 0; a < g.num_arcs(); ++a) {                       // rule 4
      const Arc& e = g.arc(a);
      if (s.at(e.tail) == kZero && (s.at(e.head) != kFixed || !s.forced[static_cast<std::size_t>(a)])) {
        s.set(e.head, kFixed);
        for (ArcId a : g.out_arcs(e.tail)) s.forced[static_cast<std::size_t>(a)] = 1;
        changed = true;
        return true;
      }
    }
    for (const Arc& e : g.arcs())                                    // rule 5
      if (s.at(e.head) == kZero && !in_plus(s.at(e.tail))) {
        s.set(e.tail, kOpen);
        changed = true;
        return true;
      }
    for (ArcId a = 0; a < g.num_arcs(); ++a) {                       // rule 6
      const Arc& e = g.arc(a);
      if (s.at(e.head) == kFixed && s.at(e.tail) == kRest && !s.forced[static_cast<std::size_t>(a)]) {
        s.set(e.tail, kOpen);
        changed = true;
        return true;
      }
    }
    return true;
  }

  void run(State s, int depth) {
    ++stats.nodes;
    for (bool changed = true; changed;)
      if (!step(s, changed)) return;
    stats.max_depth = std::max(stats.max_depth, depth);

    for (const Arc& e : g.arcs()) {
      if (s.at(e.tail) != kRest || s.at(e.head) != kRest) continue;
      State a = s;
      a.set(e.tail, kOpen);
      run(std::move(a), depth + 1);
      State b = std::move(s);
      b.set(e.tail, kZero);
      b.set(e.head, kFixed);
      b.forced[static_cast<std::size_t>(*g.find_arc(e.tail, e.head))] = 1;
      run(std::move(b), depth + 1);
      return;
    }

    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      if (s.at(u) != kOpen) continue;
      std::vector<ArcId> from_rest;
      for (ArcId a : g.in_arcs(u))
        if (s.at(g.arc(a).tail) == kRest) from_rest.push_back(a);
      if (from_rest.size() < 2) continue;
      Vertex v1 = g.arc(from_rest.front()).tail;
      State a = s;
      a.set(v1, kOpen);
      run(std::move(a), depth + 1);
      State b = std::move(s);
      b.set(v1, kZero);
      b.set(u, kFixed);
      b.forced[static_cast<std::size_t>(from_rest.front())] = 1;
      run(std::move(b), depth + 1);
      return;
    }

    ++stats.leaves;
    std::vector<ArcId> sol;
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (s.forced[static_cast<std::size_t>(a)]) sol.push_back(a);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (s.at(v) != kOpen) continue;
      auto ins = g.in_arcs(v);
      if (ins.empty()) return;
      auto it = std::find_if(ins.begin(), ins.end(), [&](ArcId a) { return s.at(g.arc(a).tail) == kRest; });
      sol.push_back(it != ins.end() ? *it : ins.front());
    }
    if (static_cast<int>(sol.size()) <= k) offer(best, std::move(sol));
  }
};

}  // namespace

std::optional<Solution> solve_11(const Digraph& g, int k, FptStats* stats, Fpt11Options options) {
  if (k < 0) throw InputError("k must be non-negative");
  auto t0 = std::chrono::steady_clock::now();
  FptStats local;
  Branch11 b{g, k, options, stats ? *stats : local,
             std::vector<Mark>(static_cast<std::size_t>(g.num_vertices()), kFree), 0, std::nullopt};
  b.run(0);
  if (!b.best) return std::nullopt;
  return Solution{std::move(*b.best), "fpt11", ms_since(t0)};
}

std::optional<Solution> solve_01(const Digraph& g, int k, FptStats* stats) {
  if (k < 0) throw InputError("k must be non-negative");
  auto t0 = std::chrono::steady_clock::now();
  FptStats local;
  Branch01 b{g, k, stats ? *stats : local, std::nullopt};
  Branch01::State s{std::vector<Status>(static_cast<std::size_t>(g.num_vertices()), kRest),
                    std::vector<char>(static_cast<std::size_t>(g.num_arcs()), 0), 0};
  b.run(std::move(s), 0);
  if (!b.best) return std::nullopt;
  return Solution{std::move(*b.best), "fpt01", ms_since(t0)};
}

}  // namespace deds
