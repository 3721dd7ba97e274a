#include "deds/kernel.hpp"

#include <algorithm>

#include "deds/error.hpp"

namespace deds {

std::string to_string(KernelVerdict v) {
  switch (v) {
    case KernelVerdict::reduced: return "reduced";
    case KernelVerdict::rejected_no: return "rejected-no";
    case KernelVerdict::trivially_yes: return "trivially-yes";
  }
  return "?";
}

namespace {

// Induced subgraph on `keep` (ascending original ids), arcs in original order.
void induce(const Digraph& g, const std::vector<Vertex>& keep, const std::vector<char>& arc_alive,
            KernelResult& kr) {
  std::vector<Vertex> new_id(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[static_cast<std::size_t>(keep[i])] = static_cast<Vertex>(i);
  std::vector<Arc> arcs;
  kr.arc_origin.clear();
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    if (!arc_alive.empty() && !arc_alive[static_cast<std::size_t>(a)]) continue;
    Vertex u = new_id[static_cast<std::size_t>(g.arc(a).tail)], v = new_id[static_cast<std::size_t>(g.arc(a).head)];
    if (u < 0 || v < 0) continue;
    arcs.push_back({u, v});
    kr.arc_origin.push_back(a);
  }
  kr.vertex_origin = keep;
  kr.reduced = Digraph(static_cast<int>(keep.size()), std::move(arcs));
}

void finish(KernelResult& kr) {
  auto& c = kr.certificate;
  c.vertices_out = kr.reduced.num_vertices();
  c.arcs_out = kr.reduced.num_arcs();
  if (kr.verdict == KernelVerdict::reduced && kr.reduced.num_arcs() == 0) kr.verdict = KernelVerdict::trivially_yes;
  if (kr.verdict != KernelVerdict::rejected_no) {
    long long arc_limit = c.has_digons ? 2 * c.arc_bound : c.arc_bound;
    c.within_bounds = c.vertices_out <= c.vertex_bound && c.arcs_out <= arc_limit;
  }
}

KernelResult reject(KernelResult kr, std::string why) {
  kr.verdict = KernelVerdict::rejected_no;
  kr.certificate.reason = std::move(why);
  kr.reduced = Digraph();
  kr.vertex_origin.clear();
  kr.arc_origin.clear();
  finish(kr);
  return kr;
}

std::vector<char> matched_vertices(const Digraph& g, const std::vector<char>& arc_alive, int& matching_size) {
  std::vector<Arc> live;
  for (ArcId a = 0; a < g.num_arcs(); ++a)
    if (arc_alive.empty() || arc_alive[static_cast<std::size_t>(a)]) live.push_back(g.arc(a));
  Digraph h(g.num_vertices(), std::move(live));
  UndirectedView u(h);
  auto m = maximal_matching(u.graph);
  matching_size = static_cast<int>(m.size());
  std::vector<char> in_s(static_cast<std::size_t>(g.num_vertices()), 0);
  for (EdgeId e : m) {
    in_s[static_cast<std::size_t>(u.graph.edges[static_cast<std::size_t>(e)].first)] = 1;
    in_s[static_cast<std::size_t>(u.graph.edges[static_cast<std::size_t>(e)].second)] = 1;
  }
  return in_s;
}

}  // namespace

KernelResult kernelize_11(const Digraph& g, int k) {
  if (k < 0) throw InputError("k must be non-negative");
  KernelResult kr;
  kr.p = 1;
  kr.q = 1;
  kr.k_out = k;
  auto& c = kr.certificate;
  c.vertices_in = g.num_vertices();
  c.arcs_in = g.num_arcs();
  const long long kk = k;
  c.vertex_bound = 8 * kk * kk + 12 * kk;
  c.arc_bound = (4 * kk) * (4 * kk - 1) / 2 + 32 * kk * kk * kk + 32 * kk * kk;
  for (const Arc& e : g.arcs())
    if (e.tail < e.head && g.has_arc(e.head, e.tail)) c.has_digons = true;

  auto in_s = matched_vertices(g, {}, c.matching_size);
  if (c.matching_size > 2 * k) return reject(std::move(kr), "maximal matching larger than 2k");

  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> marked(n, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!in_s[static_cast<std::size_t>(v)]) continue;
    std::vector<Vertex> tails, heads;
    for (ArcId a : g.in_arcs(v))
      if (!in_s[static_cast<std::size_t>(g.arc(a).tail)]) tails.push_back(g.arc(a).tail);
    for (ArcId a : g.out_arcs(v))
      if (!in_s[static_cast<std::size_t>(g.arc(a).head)]) heads.push_back(g.arc(a).head);
    for (auto* side : {&tails, &heads}) {
      std::sort(side->begin(), side->end());
      for (std::size_t i = 0; i < side->size() && i < static_cast<std::size_t>(k) + 1; ++i)
        marked[static_cast<std::size_t>((*side)[i])] = 1;
    }
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (in_s[static_cast<std::size_t>(v)] || marked[static_cast<std::size_t>(v)]) keep.push_back(v);
  induce(g, keep, {}, kr);
  finish(kr);
  return kr;
}

KernelResult kernelize_01(const Digraph& g, int k) {
  if (k < 0) throw InputError("k must be non-negative");
  KernelResult kr;
  kr.p = 0;
  kr.q = 1;
  auto& c = kr.certificate;
  c.vertices_in = g.num_vertices();
  c.arcs_in = g.num_arcs();

  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<char> alive(static_cast<std::size_t>(g.num_arcs()), 1);
  std::vector<int> indeg(n), outdeg(n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    indeg[static_cast<std::size_t>(v)] = g.in_degree(v);
    outdeg[static_cast<std::size_t>(v)] = g.out_degree(v);
  }
  // Source-to-sink arcs dominate nothing else and only themselves dominate them.
  for (bool changed = true; changed;) {
    changed = false;
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      const Arc& e = g.arc(a);
      if (!alive[static_cast<std::size_t>(a)] || indeg[static_cast<std::size_t>(e.tail)] != 0 ||
          outdeg[static_cast<std::size_t>(e.head)] != 0)
        continue;
      alive[static_cast<std::size_t>(a)] = 0;
      --outdeg[static_cast<std::size_t>(e.tail)];
      --indeg[static_cast<std::size_t>(e.head)];
      kr.removed_arcs.push_back(a);
      changed = true;
    }
  }
  kr.k_out = k - static_cast<int>(kr.removed_arcs.size());
  const long long kk = std::max(kr.k_out, 0);
  c.vertex_bound = 3 * kk + 1;
  c.arc_bound = (2 * kk) * (2 * kk - 1) + 2 * (2 * kk) * kk + 2 * kk;
  if (kr.k_out < 0) return reject(std::move(kr), "source-to-sink arcs exceed the budget");

  auto in_s = matched_vertices(g, alive, c.matching_size);
  if (c.matching_size > kr.k_out) return reject(std::move(kr), "maximal matching larger than k");

  int non_sinks = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (!in_s[v] && outdeg[v] > 0) ++non_sinks;
  if (non_sinks >= kr.k_out + 1) return reject(std::move(kr), "k+1 non-sinks outside the vertex cover");

  std::vector<Vertex> keep;
  std::vector<char> merged(n, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto vi = static_cast<std::size_t>(v);
    if (!in_s[vi] && outdeg[vi] == 0) {
      merged[vi] = 1;
      kr.merged_sinks.push_back(v);
    } else {
      keep.push_back(v);
    }
  }
  induce(g, keep, alive, kr);

  // Attach the merged sink u. In-arcs of v are taken from the graph after
  // the source-to-sink rule, which is what lifting must respect.
  std::vector<Arc> arcs(kr.reduced.arcs().begin(), kr.reduced.arcs().end());
  std::vector<ArcId> tails_to_u;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    Vertex v = keep[i];
    bool hits = false;
    for (ArcId a : g.out_arcs(v))
      if (alive[static_cast<std::size_t>(a)] && merged[static_cast<std::size_t>(g.arc(a).head)]) hits = true;
    if (!hits) continue;
    ArcId in_arc = -1;
    for (ArcId a : g.in_arcs(v))
      if (alive[static_cast<std::size_t>(a)]) {
        in_arc = a;
        break;
      }
    if (in_arc < 0) throw std::logic_error("kernel: tail of a sink arc is a source after reduction");
    tails_to_u.push_back(static_cast<ArcId>(i));
    kr.lift_arc.push_back(in_arc);
  }
  kr.lift_arc.insert(kr.lift_arc.begin(), arcs.size(), -1);
  if (!tails_to_u.empty()) {
    auto u = static_cast<Vertex>(keep.size());
    for (ArcId i : tails_to_u) {
      arcs.push_back({static_cast<Vertex>(i), u});
      kr.arc_origin.push_back(-1);
    }
    kr.vertex_origin.push_back(-1);
    kr.reduced = Digraph(u + 1, std::move(arcs));
  }
  finish(kr);
  return kr;
}

std::vector<ArcId> lift_solution(const KernelResult& kr, const std::vector<ArcId>& reduced_solution) {
  if (kr.verdict == KernelVerdict::rejected_no) throw InputError("cannot lift through a rejected kernel");
  std::vector<ArcId> out = kr.removed_arcs;
  for (ArcId a : reduced_solution) {
    if (a < 0 || a >= kr.reduced.num_arcs()) throw InputError("reduced solution arc out of range");
    ArcId orig = kr.arc_origin[static_cast<std::size_t>(a)];
    out.push_back(orig >= 0 ? orig : kr.lift_arc[static_cast<std::size_t>(a)]);
  }
  normalize_arcs(out);
  return out;
}

}  // namespace deds
