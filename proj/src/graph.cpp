#include "deds/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "deds/error.hpp"

namespace deds {

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)), out_(static_cast<std::size_t>(std::max(n, 0))),
      in_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw InputError("negative vertex count");
  index_.reserve(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto [u, v] = arcs_[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("arc " + std::to_string(i) + " has an endpoint out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto a = static_cast<ArcId>(i);
    if (!index_.emplace(key(u, v), a).second)
      throw InputError("parallel arc " + std::to_string(u) + "->" + std::to_string(v));
    out_[static_cast<std::size_t>(u)].push_back(a);
    in_[static_cast<std::size_t>(v)].push_back(a);
  }
}

std::optional<ArcId> Digraph::find_arc(Vertex tail, Vertex head) const {
  auto it = index_.find(key(tail, head));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const auto& a : arcs_) rev.push_back({a.head, a.tail});
  return Digraph(n_, std::move(rev));
}

bool Digraph::is_tournament() const {
  auto pairs = static_cast<long long>(n_) * (n_ - 1) / 2;
  if (static_cast<long long>(arcs_.size()) != pairs) return false;
  // No digons plus the right count means every pair is covered exactly once.
  for (const auto& a : arcs_)
    if (has_arc(a.head, a.tail)) return false;
  return true;
}

Tournament::Tournament(Digraph g) : g_(std::move(g)) {
  if (!g_.is_tournament()) throw InputError("graph is not a tournament");
}

UndirectedGraph::UndirectedGraph(int n_, std::vector<std::pair<Vertex, Vertex>> edges_)
    : n(n_), edges(std::move(edges_)) {
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw InputError("bad undirected edge");
}

std::vector<std::vector<Vertex>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

int UndirectedGraph::max_degree() const {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

UndirectedView::UndirectedView(const Digraph& g) {
  graph.n = g.num_vertices();
  arc_edge.assign(static_cast<std::size_t>(g.num_arcs()), -1);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const auto [u, v] = g.arc(a);
    auto back = g.find_arc(v, u);
    if (back && *back < a) {
      arc_edge[static_cast<std::size_t>(a)] = arc_edge[static_cast<std::size_t>(*back)];
      continue;
    }
    arc_edge[static_cast<std::size_t>(a)] = static_cast<EdgeId>(graph.edges.size());
    graph.edges.emplace_back(u, v);
    edge_arc.push_back(a);
  }
}

std::vector<std::vector<Vertex>> scc_partition(const Digraph& g) {
  // Iterative Tarjan. Components come out in reverse topological order.
  const int n = g.num_vertices();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::vector<std::vector<Vertex>> comps;
  int counter = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      auto vi = static_cast<std::size_t>(v);
      if (pos == 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      auto outs = g.out_arcs(v);
      if (pos < outs.size()) {
        Vertex w = g.arc(outs[pos]).head;
        ++pos;
        auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          call.emplace_back(w, 0);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
      Vertex done = v;
      call.pop_back();
      if (!call.empty()) {
        auto pi = static_cast<std::size_t>(call.back().first);
        low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
      }
    }
  }
  std::reverse(comps.begin(), comps.end());
  return comps;
}

namespace {

template <bool Forward>
std::vector<int> bfs(const Digraph& g, Vertex s, int max_depth) {
  if (s < 0 || s >= g.num_vertices()) throw InputError("BFS source out of range");
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
  std::deque<Vertex> queue{s};
  dist[static_cast<std::size_t>(s)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(v)];
    if (d >= max_depth) continue;
    for (ArcId a : Forward ? g.out_arcs(v) : g.in_arcs(v)) {
      Vertex w = Forward ? g.arc(a).head : g.arc(a).tail;
      auto& dw = dist[static_cast<std::size_t>(w)];
      if (dw == kUnreachable) {
        dw = d + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> dist_from(const Digraph& g, Vertex s, int max_depth) {
  return bfs<true>(g, s, max_depth);
}

std::vector<int> dist_to(const Digraph& g, Vertex t, int max_depth) {
  return bfs<false>(g, t, max_depth);
}

std::vector<int> all_pairs_distances(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> d(n * n);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    auto row = dist_from(g, s);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return d;
}

std::vector<EdgeId> maximal_matching(const UndirectedGraph& u) {
  std::vector<char> used(static_cast<std::size_t>(u.n), 0);
  std::vector<EdgeId> matching;
  for (EdgeId e = 0; e < static_cast<EdgeId>(u.edges.size()); ++e) {
    auto [a, b] = u.edges[static_cast<std::size_t>(e)];
    if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)]) continue;
    used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = 1;
    matching.push_back(e);
  }
  return matching;
}

std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        std::span<const std::pair<int, int>> edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_left));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [l, r] = edges[i];
    if (l < 0 || l >= n_left || r < 0 || r >= n_right) throw InputError("bipartite edge out of range");
    adj[static_cast<std::size_t>(l)].push_back(static_cast<int>(i));
  }
  std::vector<int> match_left(static_cast<std::size_t>(n_left), -1);
  std::vector<int> match_right(static_cast<std::size_t>(n_right), -1);
  std::vector<int> seen(static_cast<std::size_t>(n_right), -1);

  // Kuhn's augmenting paths, iterative to stay off the call stack.
  for (int root = 0; root < n_left; ++root) {
    std::vector<std::pair<int, std::size_t>> path{{root, 0}};
    std::vector<int> via;  // edge used to enter the next left vertex
    bool found = false;
    while (!path.empty() && !found) {
      auto& [l, pos] = path.back();
      const auto& nbrs = adj[static_cast<std::size_t>(l)];
      if (pos == nbrs.size()) {
        path.pop_back();
        if (!via.empty()) via.pop_back();
        continue;
      }
      int e = nbrs[pos++];
      int r = edges[static_cast<std::size_t>(e)].second;
      if (seen[static_cast<std::size_t>(r)] == root) continue;
      seen[static_cast<std::size_t>(r)] = root;
      via.push_back(e);
      int owner = match_right[static_cast<std::size_t>(r)];
      if (owner == -1) {
        found = true;
      } else {
        path.emplace_back(edges[static_cast<std::size_t>(owner)].first, 0);
      }
    }
    if (!found) continue;
    for (int e : via) {
      auto [l, r] = edges[static_cast<std::size_t>(e)];
      match_left[static_cast<std::size_t>(l)] = e;
      match_right[static_cast<std::size_t>(r)] = e;
    }
  }
  return match_left;
}

std::vector<std::size_t> min_edge_cover_bipartite(int n_left, int n_right,
                                                  std::span<const std::pair<int, int>> edges) {
  auto match_left = max_bipartite_matching(n_left, n_right, edges);
  std::vector<char> left_done(static_cast<std::size_t>(n_left), 0);
  std::vector<char> right_done(static_cast<std::size_t>(n_right), 0);
  std::vector<char> chosen(edges.size(), 0);
  for (int l = 0; l < n_left; ++l) {
    int e = match_left[static_cast<std::size_t>(l)];
    if (e < 0) continue;
    chosen[static_cast<std::size_t>(e)] = 1;
    left_done[static_cast<std::size_t>(l)] = 1;
    right_done[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].second)] = 1;
  }
  std::vector<int> first_left(static_cast<std::size_t>(n_left), -1);
  std::vector<int> first_right(static_cast<std::size_t>(n_right), -1);
  for (std::size_t i = edges.size(); i-- > 0;) {
    first_left[static_cast<std::size_t>(edges[i].first)] = static_cast<int>(i);
    first_right[static_cast<std::size_t>(edges[i].second)] = static_cast<int>(i);
  }
  for (int l = 0; l < n_left; ++l) {
    if (left_done[static_cast<std::size_t>(l)]) continue;
    int e = first_left[static_cast<std::size_t>(l)];
    if (e < 0) throw InputError("no edge cover: left vertex " + std::to_string(l) + " is isolated");
    chosen[static_cast<std::size_t>(e)] = 1;
  }
  for (int r = 0; r < n_right; ++r) {
    if (right_done[static_cast<std::size_t>(r)]) continue;
    int e = first_right[static_cast<std::size_t>(r)];
    if (e < 0) throw InputError("no edge cover: right vertex " + std::to_string(r) + " is isolated");
    chosen[static_cast<std::size_t>(e)] = 1;
  }
  std::vector<std::size_t> cover;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (chosen[i]) cover.push_back(i);
  return cover;
}

std::vector<Vertex> hamiltonian_path(const Tournament& t) {
  const auto& g = t.graph();
  std::vector<Vertex> path;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    // Insert before the first path vertex that v beats; if v beats none it goes last.
    // The predecessor (if any) then beats v, since it was not beaten by v.
    auto it = std::find_if(path.begin(), path.end(), [&](Vertex w) { return g.has_arc(v, w); });
    path.insert(it, v);
  }
  return path;
}

Vertex king(const Tournament& t) {
  const auto& g = t.graph();
  if (g.num_vertices() == 0) throw InputError("king of an empty tournament");
  Vertex best = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v)
    if (g.out_degree(v) > g.out_degree(best)) best = v;
  return best;
}

std::vector<Vertex> greedy_dominating_set(const Tournament& t) {
  const auto& g = t.graph();
  const int n = g.num_vertices();
  std::vector<char> undominated(static_cast<std::size_t>(n), 1);
  int remaining = n;
  std::vector<Vertex> ds;
  while (remaining > 0) {
    Vertex best = -1;
    int best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!undominated[static_cast<std::size_t>(v)]) continue;
      int deg = 0;
      for (ArcId a : g.out_arcs(v)) deg += undominated[static_cast<std::size_t>(g.arc(a).head)];
      if (deg > best_deg) {
        best = v;
        best_deg = deg;
      }
    }
    ds.push_back(best);
    undominated[static_cast<std::size_t>(best)] = 0;
    --remaining;
    for (ArcId a : g.out_arcs(best)) {
      auto h = static_cast<std::size_t>(g.arc(a).head);
      if (undominated[h]) {
        undominated[h] = 0;
        --remaining;
      }
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool is_dominating_set(const Digraph& g, std::span<const Vertex> set) {
  std::vector<char> covered(static_cast<std::size_t>(g.num_vertices()), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= g.num_vertices()) throw InputError("dominating-set vertex out of range");
    covered[static_cast<std::size_t>(v)] = 1;
    for (ArcId a : g.out_arcs(v)) covered[static_cast<std::size_t>(g.arc(a).head)] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace deds
