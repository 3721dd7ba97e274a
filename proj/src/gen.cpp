#include "deds/gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "deds/error.hpp"
#include "deds/tournament.hpp"

namespace deds {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t reject = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t x = next();
    if (x >= reject) return x % bound;
  }
}

Rng Rng::split(std::uint64_t stream) const { return Rng(splitmix64(seed_ ^ splitmix64(~stream))); }

namespace {

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// Grows a digraph one path at a time, allocating the lowest free ids.
struct Builder {
  int n = 0;
  std::vector<Arc> arcs;
  std::vector<char> optional;
  std::vector<Vertex> internal;

  Vertex fresh() { return n++; }
  ArcId add(Vertex u, Vertex v, bool opt) {
    arcs.push_back({u, v});
    optional.push_back(opt ? 1 : 0);
    return static_cast<ArcId>(arcs.size() - 1);
  }
  // Directed path of `length` arcs from `from` to `to` through new vertices.
  void path(Vertex from, Vertex to, int length, bool opt) {
    Vertex prev = from;
    for (int i = 1; i < length; ++i) {
      Vertex v = fresh();
      internal.push_back(v);
      add(prev, v, opt);
      prev = v;
    }
    add(prev, to, opt);
  }
};

std::uint64_t pair_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Tournament gen_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("tournament needs at least one vertex");
  Rng rng(seed);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) arcs.push_back(rng.coin() ? Arc{i, j} : Arc{j, i});
  return Tournament(Digraph(n, std::move(arcs)));
}

Digraph gen_digraph(int n, double arc_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("negative vertex count");
  if (!(arc_prob >= 0.0 && arc_prob <= 1.0)) throw InputError("arc probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng.unit() < arc_prob) arcs.push_back({u, v});
  return Digraph(n, std::move(arcs));
}

ReductionOutput mcc_to_optional(const McInstance& mc) {
  const int n = mc.n, k = mc.k;
  if (k < 1 || n < 2) throw InputError("need k >= 1 classes of size n >= 2");
  if (n % 2 != 0) throw InputError("class size must be even");
  if (mc.graph.n != k * n) throw InputError("graph must have k*n vertices");
  std::set<std::uint64_t> edges;
  for (auto [u, v] : mc.graph.edges) {
    if (u / n == v / n) throw InputError("class " + std::to_string(u / n) + " is not independent");
    edges.insert(pair_key(u, v));
  }
  auto vid = [n](int i, int j) { return static_cast<Vertex>(i * n + j); };

  Builder b;
  b.n = k * n;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) b.add(vid(i, j), vid(i, (j + 1) % n), false);

  nlohmann::ordered_json guards = nlohmann::ordered_json::array();
  for (int i = 0; i < k; ++i) {
    const Vertex anchor = vid(i, n / 2);
    const Vertex first = b.n;
    Vertex prev = anchor;
    for (int s = 0; s < 5 * n; ++s) {
      Vertex v = b.fresh();
      b.add(prev, v, false);
      prev = v;
    }
    b.add(prev, anchor, false);
    guards.push_back({{"class", i}, {"anchor", anchor}, {"first", first}, {"last", prev}});
  }

  nlohmann::ordered_json gadgets = nlohmann::ordered_json::array();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int a = 0; a < n; ++a)
        for (int bb = 0; bb < n; ++bb) {
          if (edges.count(pair_key(vid(i, a), vid(j, bb)))) continue;
          const Vertex e = b.fresh(), f = b.fresh();
          b.add(e, f, false);
          if (a > 0) b.path(vid(i, 0), e, a + 2 * n, true);
          if (bb > 0) b.path(vid(j, 0), e, bb + 2 * n, true);
          b.path(f, vid(i, 0), a > 0 ? 3 * n - a + 1 : 2 * n + 1, true);
          b.path(f, vid(j, 0), bb > 0 ? 3 * n - bb + 1 : 2 * n + 1, true);
          gadgets.push_back({{"i", i}, {"j", j}, {"a", a}, {"b", bb}, {"e", e}, {"f", f}});
        }

  ReductionOutput out;
  out.instance = Instance(Digraph(b.n, std::move(b.arcs)), 3 * n, 3 * n, std::nullopt, std::move(b.optional));
  out.threshold = k;
  out.s_set = std::move(b.internal);
  std::sort(out.s_set.begin(), out.s_set.end());
  out.lineage = {{"construction", "mcc_to_optional"},
                 {"n", n},
                 {"k", k},
                 {"p", 3 * n},
                 {"q", 3 * n},
                 {"threshold", k},
                 {"vertices", out.instance.g.num_vertices()},
                 {"arcs", out.instance.g.num_arcs()},
                 {"layout",
                  {{"class_vertices", "v^i_j = i*n + j"}, {"guard_cycles", guards}, {"gadgets", gadgets}}}};
  return out;
}

ReductionOutput optional_to_full(const ReductionOutput& r, std::span<const Vertex> s_set) {
  const auto& g = r.instance.g;
  const int p = r.instance.p;
  if (p != r.instance.q || p < 3 || p % 3 != 0) throw InputError("expected a (3n,3n) instance");
  const int n = p / 3;
  std::vector<char> in_s(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex u : s_set) {
    if (u < 0 || u >= g.num_vertices()) throw InputError("S vertex out of range");
    if (g.in_degree(u) == 0 || g.out_degree(u) == 0) throw InputError("S contains a source or sink");
    in_s[static_cast<std::size_t>(u)] = 1;
  }
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const Arc& e = g.arc(a);
    bool touches = in_s[static_cast<std::size_t>(e.tail)] || in_s[static_cast<std::size_t>(e.head)];
    if (r.instance.is_optional(a) && !touches) throw InputError("optional arc not incident to S");
    if (!r.instance.is_optional(a) && touches) throw InputError("mandatory arc incident to S");
  }

  Builder b;
  b.n = g.num_vertices();
  for (const Arc& e : g.arcs()) b.add(e.tail, e.head, false);
  const Vertex u1 = b.fresh(), u2 = b.fresh();
  const ArcId anchor = b.add(u1, u2, false);
  for (int i = 0; i < r.threshold + 2; ++i) b.path(b.fresh(), u1, 3 * n - 1, false);
  for (Vertex u : s_set) {
    b.path(u2, u, 3 * n - 1, false);
    b.path(u, u1, 3 * n - 1, false);
  }

  ReductionOutput out;
  out.instance = Instance(Digraph(b.n, std::move(b.arcs)), p, p);
  out.threshold = r.threshold + 1;
  out.anchor_arc = anchor;
  out.lineage = {{"construction", "optional_to_full"},
                 {"source", r.lineage},
                 {"threshold", out.threshold},
                 {"u1", u1},
                 {"u2", u2},
                 {"anchor_arc", anchor},
                 {"vertices", out.instance.g.num_vertices()},
                 {"arcs", out.instance.g.num_arcs()}};
  return out;
}

AimInstance is_to_aim(const UndirectedGraph& g, int k) {
  if (g.max_degree() > 3) throw InputError("is_to_aim expects maximum degree 3");
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());
  AimInstance out;
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x = 0; x < n; ++x) edges.push_back({x, n + x});
  for (int i = 0; i < m; ++i) {
    auto [x, y] = g.edges[static_cast<std::size_t>(i)];
    const Vertex base = 2 * n + 3 * i;  // x - base - base+1 - base+2 - y
    edges.push_back({x, base});
    edges.push_back({base, base + 1});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base + 2, y});
  }
  out.graph = UndirectedGraph(2 * n + 3 * m, std::move(edges));
  out.L = n + 2 * m + k;
  return out;
}

namespace {

int check_bipartite_halves(const UndirectedGraph& g) {
  if (g.n % 2 != 0) throw InputError("bipartite input needs |A| = |B|");
  const int n = g.n / 2;
  for (auto [u, v] : g.edges)
    if ((u < n) == (v < n)) throw InputError("edge inside one side of the bipartition");
  return n;
}

}  // namespace

ReductionOutput aim_to_tournament(const UndirectedGraph& g, int L, std::uint64_t seed) {
  const int n = check_bipartite_halves(g);
  if (L % 2 != 0) throw InputError("L must be even");
  std::set<std::uint64_t> edges;
  for (auto [u, v] : g.edges) edges.insert(pair_key(u, v));
  Rng rng(seed);
  const int total = 6 * n;
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < total; ++i)
    for (Vertex j = i + 1; j < total; ++j) {
      if (i < n && j >= n && j < 2 * n)
        arcs.push_back(edges.count(pair_key(i, j)) ? Arc{i, j} : Arc{j, i});
      else
        arcs.push_back(rng.coin() ? Arc{i, j} : Arc{j, i});
    }
  ReductionOutput out;
  out.instance = Instance(Digraph(total, std::move(arcs)), 1, 1);
  out.threshold = total - L / 2 + 1;
  out.lineage = {{"construction", "aim_to_tournament"},
                 {"n", n},
                 {"L", L},
                 {"seed", seed},
                 {"threshold", out.threshold},
                 {"layout", {{"A", {0, n}}, {"B", {n, 2 * n}}, {"C", {2 * n, total}}}}};
  return out;
}

PlantedAim plant_aim(int n, int pairs, int singles, std::uint64_t seed) {
  if (pairs < 0 || singles < 0 || pairs + singles >= n)
    throw InputError("planted matching must leave vertices outside it on each side");
  Rng rng(seed);
  std::vector<Vertex> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[static_cast<std::size_t>(i)] = i;
    b[static_cast<std::size_t>(i)] = n + i;
  }
  shuffle(a, rng);
  shuffle(b, rng);
  PlantedAim out;
  const auto s_end = static_cast<std::ptrdiff_t>(pairs + singles);
  out.matched_a.assign(a.begin(), a.begin() + pairs);
  out.matched_b.assign(b.begin(), b.begin() + pairs);
  out.single_a.assign(a.begin() + pairs, a.begin() + s_end);
  out.single_b.assign(b.begin() + pairs, b.begin() + s_end);
  out.L = 2 * (pairs + singles);

  std::vector<char> in_s(static_cast<std::size_t>(2 * n), 0);
  for (std::ptrdiff_t i = 0; i < s_end; ++i) {
    in_s[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = 1;
    in_s[static_cast<std::size_t>(b[static_cast<std::size_t>(i)])] = 1;
  }
  std::vector<int> deg(static_cast<std::size_t>(2 * n), 0);
  std::set<std::uint64_t> have;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto link = [&](Vertex x, Vertex y) {
    if (have.count(pair_key(x, y)) || deg[static_cast<std::size_t>(x)] >= 4 || deg[static_cast<std::size_t>(y)] >= 4)
      return false;
    have.insert(pair_key(x, y));
    ++deg[static_cast<std::size_t>(x)];
    ++deg[static_cast<std::size_t>(y)];
    edges.push_back({std::min(x, y), std::max(x, y)});
    return true;
  };
  for (int i = 0; i < pairs; ++i) link(out.matched_a[static_cast<std::size_t>(i)], out.matched_b[static_cast<std::size_t>(i)]);

  // Every vertex gets a neighbour; S vertices only ever meet non-S vertices.
  std::vector<Vertex> rest_a(a.begin() + s_end, a.end()), rest_b(b.begin() + s_end, b.end());
  auto attach = [&](Vertex x, const std::vector<Vertex>& side) {
    std::vector<Vertex> options;
    for (Vertex y : side)
      if (deg[static_cast<std::size_t>(y)] < 4 && !have.count(pair_key(x, y))) options.push_back(y);
    if (options.empty()) return false;
    return link(x, options[rng.below(options.size())]);
  };
  for (Vertex x : a)
    if (deg[static_cast<std::size_t>(x)] == 0 && !attach(x, in_s[static_cast<std::size_t>(x)] ? rest_b : b))
      throw InputError("cannot keep maximum degree 4 with this planted matching");
  for (Vertex y : b)
    if (deg[static_cast<std::size_t>(y)] == 0 && !attach(y, in_s[static_cast<std::size_t>(y)] ? rest_a : a))
      throw InputError("cannot keep maximum degree 4 with this planted matching");
  // A few extra random edges that do not touch the planted structure twice.
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = n; y < 2 * n; ++y) {
      if (in_s[static_cast<std::size_t>(x)] && in_s[static_cast<std::size_t>(y)]) continue;
      if (rng.below(4) == 0) link(x, y);
    }
  std::sort(edges.begin(), edges.end());
  out.graph = UndirectedGraph(2 * n, std::move(edges));
  return out;
}

namespace {

// Vertex-disjoint paths from `from` to `to` using only arcs whose endpoints
// are allowed, by unit-capacity augmenting paths on the split graph.
std::optional<std::vector<std::vector<Vertex>>> disjoint_paths(const Digraph& g, const std::vector<Vertex>& from,
                                                               const std::vector<Vertex>& to,
                                                               const std::vector<char>& allowed) {
  const int n = g.num_vertices();
  // Node 2v is v_in, 2v+1 is v_out; 2n is the source, 2n+1 the sink.
  const int nodes = 2 * n + 2, src = 2 * n, snk = 2 * n + 1;
  struct Edge {
    int to, cap;
  };
  std::vector<Edge> es;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  auto add = [&](int u, int v) {
    adj[static_cast<std::size_t>(u)].push_back(static_cast<int>(es.size()));
    es.push_back({v, 1});
    adj[static_cast<std::size_t>(v)].push_back(static_cast<int>(es.size()));
    es.push_back({u, 0});
  };
  for (Vertex v = 0; v < n; ++v)
    if (allowed[static_cast<std::size_t>(v)]) add(2 * v, 2 * v + 1);
  for (const Arc& e : g.arcs())
    if (allowed[static_cast<std::size_t>(e.tail)] && allowed[static_cast<std::size_t>(e.head)])
      add(2 * e.tail + 1, 2 * e.head);
  for (Vertex x : from) add(src, 2 * x);
  for (Vertex y : to) add(2 * y + 1, snk);

  int flow = 0;
  for (;;) {
    std::vector<int> via(static_cast<std::size_t>(nodes), -1);
    std::vector<int> queue{src};
    via[static_cast<std::size_t>(src)] = -2;
    for (std::size_t h = 0; h < queue.size() && via[static_cast<std::size_t>(snk)] == -1; ++h)
      for (int id : adj[static_cast<std::size_t>(queue[h])]) {
        const Edge& e = es[static_cast<std::size_t>(id)];
        if (e.cap > 0 && via[static_cast<std::size_t>(e.to)] == -1) {
          via[static_cast<std::size_t>(e.to)] = id;
          queue.push_back(e.to);
        }
      }
    if (via[static_cast<std::size_t>(snk)] == -1) break;
    for (int v = snk; v != src;) {
      int id = via[static_cast<std::size_t>(v)];
      --es[static_cast<std::size_t>(id)].cap;
      ++es[static_cast<std::size_t>(id ^ 1)].cap;
      v = es[static_cast<std::size_t>(id ^ 1)].to;
    }
    ++flow;
  }
  if (flow < static_cast<int>(from.size())) return std::nullopt;

  std::vector<std::vector<Vertex>> paths;
  for (Vertex x : from) {
    std::vector<Vertex> path{x};
    int node = 2 * x + 1;
    while (node != snk) {
      for (int id : adj[static_cast<std::size_t>(node)]) {
        Edge& e = es[static_cast<std::size_t>(id)];
        if (id % 2 == 0 && e.cap == 0) {  // saturated forward edge
          e.cap = 1;
          node = e.to == snk ? snk : e.to + 1;
          if (node != snk) path.push_back(static_cast<Vertex>(e.to / 2));
          break;
        }
      }
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

AimWitness aim_witness(const ReductionOutput& r, const PlantedAim& planted) {
  const auto& g = r.instance.g;
  const int n = planted.graph.n / 2;
  if (g.num_vertices() != 6 * n) throw InputError("tournament does not match the planted instance");
  std::vector<ArcId> d;
  std::vector<char> used(static_cast<std::size_t>(g.num_vertices()), 0);
  for (std::size_t i = 0; i < planted.matched_a.size(); ++i) {
    Vertex x = planted.matched_a[i], y = planted.matched_b[i];
    auto a = g.find_arc(x, y);
    if (!a) throw InputError("matched pair is not an edge of the planted graph");
    d.push_back(*a);
    used[static_cast<std::size_t>(x)] = used[static_cast<std::size_t>(y)] = 1;
  }

  std::vector<char> allowed(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex c = 2 * n; c < 6 * n; ++c) allowed[static_cast<std::size_t>(c)] = 1;
  for (Vertex v : planted.single_a) allowed[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : planted.single_b) allowed[static_cast<std::size_t>(v)] = 1;
  auto paths = disjoint_paths(g, planted.single_a, planted.single_b, allowed);
  if (!paths) return {std::nullopt, "not enough vertex-disjoint paths through C"};
  for (const auto& path : *paths)
    for (std::size_t i = 0; i < path.size(); ++i) {
      used[static_cast<std::size_t>(path[i])] = 1;
      if (i + 1 < path.size()) d.push_back(*g.find_arc(path[i], path[i + 1]));
    }

  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (!used[static_cast<std::size_t>(v)]) rest.push_back(v);
  if (!rest.empty()) {
    Tournament whole(g);
    auto sub = induced_tournament(whole, rest);
    auto order = hamiltonian_path(sub);
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
      d.push_back(*g.find_arc(rest[static_cast<std::size_t>(order[i])], rest[static_cast<std::size_t>(order[i + 1])]));
    Vertex s = rest[static_cast<std::size_t>(order.front())], t = rest[static_cast<std::size_t>(order.back())];
    if (g.in_degree(s) == 0) return {std::nullopt, "tournament has a source"};
    if (g.out_degree(t) == 0) return {std::nullopt, "tournament has a sink"};
    d.push_back(g.in_arcs(s).front());
    d.push_back(g.out_arcs(t).front());
  }
  normalize_arcs(d);
  return {d, ""};
}

BiasReport sample_bias(const Tournament& t, int trials, std::uint64_t seed) {
  const auto& g = t.graph();
  const int n = g.num_vertices();
  BiasReport rep;
  rep.trials = std::max(trials, 0);
  const double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  rep.set_size = std::min(static_cast<int>(std::ceil(lg * lg)), n / 2);
  if (rep.set_size == 0 || rep.trials == 0) return rep;
  Rng rng(seed);
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::vector<int> side(static_cast<std::size_t>(n));
  for (int trial = 0; trial < rep.trials; ++trial) {
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    shuffle(perm, rng);
    std::fill(side.begin(), side.end(), 0);
    const auto s = static_cast<std::size_t>(rep.set_size);
    for (std::size_t i = 0; i < s; ++i) {
      side[static_cast<std::size_t>(perm[i])] = 1;      // X
      side[static_cast<std::size_t>(perm[s + i])] = 2;  // Y
    }
    std::vector<int> out_to_y(static_cast<std::size_t>(n), 0), in_from_x(static_cast<std::size_t>(n), 0);
    for (const Arc& e : g.arcs())
      if (side[static_cast<std::size_t>(e.tail)] == 1 && side[static_cast<std::size_t>(e.head)] == 2) {
        ++out_to_y[static_cast<std::size_t>(e.tail)];
        ++in_from_x[static_cast<std::size_t>(e.head)];
      }
    bool x_ok = std::any_of(out_to_y.begin(), out_to_y.end(), [](int c) { return c >= 2; });
    bool y_ok = std::any_of(in_from_x.begin(), in_from_x.end(), [](int c) { return c >= 2; });
    rep.holds += x_ok && y_ok;
  }
  rep.frequency = static_cast<double>(rep.holds) / rep.trials;
  return rep;
}

}  // namespace deds
