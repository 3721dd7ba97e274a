#include "deds/tournament.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>

#include "deds/approx.hpp"
#include "deds/error.hpp"
#include "deds/fpt.hpp"

namespace deds {

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

Solution make(std::vector<ArcId> arcs, const char* engine, std::chrono::steady_clock::time_point t0) {
  normalize_arcs(arcs);
  return Solution{std::move(arcs), engine, ms_since(t0)};
}

std::optional<Vertex> source_of(const Digraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.in_degree(v) == 0) return v;
  return std::nullopt;
}

std::optional<Vertex> sink_of(const Digraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.out_degree(v) == 0) return v;
  return std::nullopt;
}

std::vector<ArcId> out_star(const Digraph& g, Vertex s) {
  return {g.out_arcs(s).begin(), g.out_arcs(s).end()};
}

}  // namespace

Tournament induced_tournament(const Tournament& t, const std::vector<Vertex>& keep) {
  const auto& g = t.graph();
  std::vector<Vertex> id(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) id[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<Arc> arcs;
  for (const Arc& e : g.arcs()) {
    Vertex u = id[static_cast<std::size_t>(e.tail)], v = id[static_cast<std::size_t>(e.head)];
    if (u >= 0 && v >= 0) arcs.push_back({u, v});
  }
  return Tournament(Digraph(static_cast<int>(keep.size()), std::move(arcs)));
}

Solution solve_t01(const Tournament& t) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = t.graph();
  if (g.num_vertices() <= 1) return make({}, "solve_t01", t0);
  auto comps = scc_partition(g);
  const auto& first = comps.front();
  std::vector<char> in_first(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : first) in_first[static_cast<std::size_t>(v)] = 1;

  const Vertex s = first.front();
  std::vector<ArcId> k;
  // BFS tree spanning the first component.
  std::vector<char> seen(static_cast<std::size_t>(g.num_vertices()), 0);
  std::deque<Vertex> queue{s};
  seen[static_cast<std::size_t>(s)] = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (ArcId a : g.out_arcs(v)) {
      Vertex w = g.arc(a).head;
      if (!in_first[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      k.push_back(a);
      queue.push_back(w);
    }
  }
  // Every later component is entered straight from s.
  for (ArcId a : g.out_arcs(s))
    if (!in_first[static_cast<std::size_t>(g.arc(a).head)]) k.push_back(a);
  return make(std::move(k), "solve_t01", t0);
}

Solution solve_t_pq3(const Tournament& t, int p, int q) {
  if (std::max(p, q) < 3 || p == 2 || q == 2)
    throw InputError("solve_t_pq3 needs max(p,q) >= 3 with p != 2 and q != 2");
  if (q < 3) {
    auto sol = solve_t_pq3(t.reversed(), q, p);  // arc indices survive reversal
    return sol;
  }
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = t.graph();
  const int n = g.num_vertices();
  if (n <= 1) return make({}, "solve_t_pq3", t0);

  Vertex v = king(t);
  if (g.in_degree(v) > 0) return make({g.in_arcs(v).front()}, "solve_t_pq3", t0);
  const Vertex s = v;  // the king is the source
  if (p <= 1) return make(out_star(g, s), "solve_t_pq3", t0);

  auto sink = sink_of(g);
  if (!sink) {
    // A king of the reversal has an in-arc there: one arc (3,0)-dominates T.
    Tournament rev = t.reversed();
    Vertex w = king(rev);
    return make({rev.graph().in_arcs(w).front()}, "solve_t_pq3", t0);
  }
  const Vertex tt = *sink;
  const ArcId st = *g.find_arc(s, tt);
  if (n == 2) return make({st}, "solve_t_pq3", t0);

  // (s,t) is dominated only by itself, so a smaller solution is (s,t) plus one arc.
  Instance inst(g, p, q);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (a == st) continue;
    std::vector<ArcId> pair{std::min(a, st), std::max(a, st)};
    if (verify(inst, pair)) return make(pair, "solve_t_pq3", t0);
  }
  Vertex s2 = -1, t2 = -1;
  for (Vertex x = 0; x < n; ++x) {
    if (x == s || x == tt) continue;
    if (s2 < 0 || g.out_degree(x) > g.out_degree(s2)) s2 = x;
    if (t2 < 0 || g.in_degree(x) > g.in_degree(t2)) t2 = x;
  }
  return make({st, *g.find_arc(s, s2), *g.find_arc(t2, tt)}, "solve_t_pq3", t0);
}

Solution solve_t_q2(const Tournament& t, int p, int q, TQ2Options options) {
  if (p != 2 && q != 2) throw InputError("solve_t_q2 needs p = 2 or q = 2");
  if (q != 2) return solve_t_q2(t.reversed(), q, p, options);
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = t.graph();
  const int n = g.num_vertices();
  if (n > options.vertex_limit)
    throw ResourceError("solve_t_q2 limited to " + std::to_string(options.vertex_limit) + " vertices");
  if (n <= 1) return make({}, "solve_t_q2", t0);

  auto source = source_of(g);
  if (p <= 1 && source) return make(out_star(g, *source), "solve_t_q2", t0);

  const double lg = std::log2(static_cast<double>(n));
  int bound = p >= 2 ? static_cast<int>(std::floor(2 * lg + 3)) : static_cast<int>(std::floor(lg)) + 1;
  bound = std::min(bound, n - 1);
  auto sol = exact_min_deds(Instance(g, p, q), bound, options.limits);
  if (!sol) throw std::logic_error("solve_t_q2: no solution within the proven bound");
  sol->engine = "solve_t_q2";
  sol->elapsed_ms = ms_since(t0);
  return *sol;
}

Solution ds_to_02(const Tournament& t, std::span<const Vertex> d) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = t.graph();
  if (source_of(g)) throw InputError("ds_to_02 needs a tournament without a source");
  if (!is_dominating_set(g, d)) throw InputError("ds_to_02 needs a dominating set");
  std::vector<ArcId> k;
  for (Vertex v : d) k.push_back(g.in_arcs(v).front());
  return make(std::move(k), "ds_to_02", t0);
}

Tournament ds_to_p2_instance(const Tournament& t) {
  const auto& g = t.graph();
  if (source_of(g)) throw InputError("ds_to_p2_instance needs a tournament without a source");
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  const Vertex sink = g.num_vertices();
  for (Vertex v = 0; v < sink; ++v) arcs.push_back({v, sink});
  return Tournament(Digraph(sink + 1, std::move(arcs)));
}

std::string classify(const Tournament&, int p, int q) {
  if (p < 0 || q < 0) throw InputError("p and q must be non-negative");
  if (p + q <= 1) return "solve_t01";
  if (p == 1 && q == 1) return "fpt11";
  if (p == 2 || q == 2) return "solve_t_q2";
  return "solve_t_pq3";
}

Solution bounded_22_solution(const Tournament& t) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = t.graph();
  const int n = g.num_vertices();
  if (n <= 1) return make({}, "bounded22", t0);
  auto source = source_of(g);
  if (!source) {
    auto sol = ds_to_02(t, greedy_dominating_set(t));
    return make(std::move(sol.arcs), "bounded22", t0);
  }
  auto sink = sink_of(g);
  Tournament rev = t.reversed();
  if (!sink) {
    auto sol = ds_to_02(rev, greedy_dominating_set(rev));
    return make(std::move(sol.arcs), "bounded22", t0);
  }
  // Source s and sink t: cover T - s forwards, T - t backwards, plus (s,t).
  std::vector<ArcId> k{*g.find_arc(*source, *sink)};
  auto cover_without = [&](const Tournament& tour, Vertex skip) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (v != skip) keep.push_back(v);
    auto sub = induced_tournament(tour, keep);
    for (Vertex x : greedy_dominating_set(sub)) {
      Vertex v = keep[static_cast<std::size_t>(x)];
      k.push_back(tour.graph().in_arcs(v).front());  // arc ids agree between T and its reversal
    }
  };
  cover_without(t, *source);
  cover_without(rev, *sink);
  return make(std::move(k), "bounded22", t0);
}

Solution solve_tournament(const Tournament& t, int p, int q) {
  auto t0 = std::chrono::steady_clock::now();
  const auto& g = t.graph();
  if (p == 0 && q == 0) {
    std::vector<ArcId> all(static_cast<std::size_t>(g.num_arcs()));
    for (ArcId a = 0; a < g.num_arcs(); ++a) all[static_cast<std::size_t>(a)] = a;
    return make(std::move(all), "tournament-all-arcs", t0);
  }
  auto engine = classify(t, p, q);
  if (engine == "solve_t01") return q == 1 ? solve_t01(t) : solve_t01(t.reversed());
  if (engine == "solve_t_q2") return solve_t_q2(t, p, q);
  if (engine == "solve_t_pq3") return solve_t_pq3(t, p, q);
  int upper = approx_11(g).solution.size();
  for (int k = 0; k <= upper; ++k)
    if (auto sol = solve_11(g, k)) return *sol;
  throw std::logic_error("fpt11 found nothing below the approximation bound");
}

}  // namespace deds
