#include "deds/approx.hpp"

#include <chrono>

namespace deds {

SourceSinkPartition partition_sources_sinks(const Digraph& g) {
  SourceSinkPartition part;
  part.kind.assign(static_cast<std::size_t>(g.num_vertices()), 'R');
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto& k = part.kind[static_cast<std::size_t>(v)];
    if (g.in_degree(v) == 0) {
      k = 'S';
      part.sources.push_back(v);
    } else if (g.out_degree(v) == 0) {
      k = 'T';
      part.sinks.push_back(v);
    } else {
      part.rest.push_back(v);
    }
  }
  return part;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// Residual arcs inside R not yet dominated by k, and a maximal matching of
// their underlying graph as representative arcs.
struct Residual {
  std::vector<ArcId> arcs;
  std::vector<ArcId> matching;
};

Residual residual_matching(const Digraph& g, int p, int q, const SourceSinkPartition& part,
                           const std::vector<ArcId>& k) {
  auto dom = dominated_arcs(g, p, q, k);
  Residual r;
  std::vector<Arc> kept;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const Arc& e = g.arc(a);
    if (dom[static_cast<std::size_t>(a)]) continue;
    if (part.kind[static_cast<std::size_t>(e.tail)] != 'R' || part.kind[static_cast<std::size_t>(e.head)] != 'R') continue;
    r.arcs.push_back(a);
    kept.push_back(e);
  }
  Digraph residual(g.num_vertices(), kept);
  UndirectedView u(residual);
  for (EdgeId e : maximal_matching(u.graph))
    r.matching.push_back(r.arcs[static_cast<std::size_t>(u.edge_arc[static_cast<std::size_t>(e)])]);
  return r;
}

}  // namespace

Approx01Result approx_01(const Digraph& g) {
  auto t0 = std::chrono::steady_clock::now();
  auto part = partition_sources_sinks(g);
  auto kind = [&](Vertex v) { return part.kind[static_cast<std::size_t>(v)]; };
  Approx01Result res;
  std::vector<ArcId> k;

  for (Vertex s : part.sources)
    for (ArcId a : g.out_arcs(s)) k.push_back(a);
  res.k1 = static_cast<int>(k.size());

  for (Vertex v : part.rest) {
    bool to_sink = false, from_source = false;
    for (ArcId a : g.out_arcs(v)) to_sink |= kind(g.arc(a).head) == 'T';
    for (ArcId a : g.in_arcs(v)) from_source |= kind(g.arc(a).tail) == 'S';
    if (to_sink && !from_source) {
      k.push_back(g.in_arcs(v).front());
      ++res.k2;
    }
  }

  auto r = residual_matching(g, 0, 1, part, k);
  res.matching = static_cast<int>(r.matching.size());
  std::vector<char> matched(static_cast<std::size_t>(g.num_vertices()), 0);
  std::vector<char> residual_tail(static_cast<std::size_t>(g.num_vertices()), 0);
  for (ArcId a : r.arcs) residual_tail[static_cast<std::size_t>(g.arc(a).tail)] = 1;
  std::vector<ArcId> step3;
  for (ArcId a : r.matching) {
    matched[static_cast<std::size_t>(g.arc(a).tail)] = matched[static_cast<std::size_t>(g.arc(a).head)] = 1;
    step3.push_back(a);
    step3.push_back(g.in_arcs(g.arc(a).tail).front());
  }
  for (Vertex v : part.rest) {
    if (matched[static_cast<std::size_t>(v)] || !residual_tail[static_cast<std::size_t>(v)]) continue;
    step3.push_back(g.in_arcs(v).front());
    ++res.i_plus;
  }
  k.insert(k.end(), step3.begin(), step3.end());
  normalize_arcs(k);
  res.solution = Solution{std::move(k), "approx01", ms_since(t0)};
  return res;
}

Approx11Result approx_11(const Digraph& g) {
  auto t0 = std::chrono::steady_clock::now();
  auto part = partition_sources_sinks(g);
  auto kind = [&](Vertex v) { return part.kind[static_cast<std::size_t>(v)]; };
  Approx11Result res;
  std::vector<ArcId> k;

  for (Vertex s : part.sources)
    for (ArcId a : g.out_arcs(s))
      if (kind(g.arc(a).head) == 'T') k.push_back(a);
  res.source_sink = static_cast<int>(k.size());

  for (Vertex v : part.rest) {
    bool from_source = false, to_sink = false;
    for (ArcId a : g.in_arcs(v)) from_source |= kind(g.arc(a).tail) == 'S';
    for (ArcId a : g.out_arcs(v)) to_sink |= kind(g.arc(a).head) == 'T';
    if (from_source) {
      k.push_back(g.out_arcs(v).front());
      ++res.after_source;
    }
    if (to_sink) {
      k.push_back(g.in_arcs(v).front());
      ++res.before_sink;
    }
  }

  auto r = residual_matching(g, 1, 1, part, k);
  res.matching = static_cast<int>(r.matching.size());
  for (ArcId a : r.matching) {
    k.push_back(a);
    k.push_back(g.in_arcs(g.arc(a).tail).front());
    k.push_back(g.out_arcs(g.arc(a).head).front());
  }
  normalize_arcs(k);
  res.solution = Solution{std::move(k), "approx11", ms_since(t0)};
  return res;
}

}  // namespace deds
