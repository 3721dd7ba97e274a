#pragma once

// Test-side reference implementations. Deliberately naive and independent of
// the library code paths they check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace ref {

using deds::Arc;
using deds::ArcId;
using deds::Digraph;
using deds::Vertex;

// Marks every arc on a walk of length <= len leaving `start` (forward) or
// entering it (backward). Walk enumeration, no distances involved.
inline void walk_mark(const Digraph& g, Vertex start, int len, bool forward, std::vector<char>& mark) {
  if (len <= 0) return;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const Arc& e = g.arc(a);
    if ((forward ? e.tail : e.head) != start) continue;
    mark[static_cast<std::size_t>(a)] = 1;
    walk_mark(g, forward ? e.head : e.tail, len - 1, forward, mark);
  }
}

inline std::vector<char> dominated(const Digraph& g, int p, int q, const std::vector<ArcId>& k) {
  std::vector<char> mark(static_cast<std::size_t>(g.num_arcs()), 0);
  for (ArcId a : k) {
    mark[static_cast<std::size_t>(a)] = 1;
    walk_mark(g, g.arc(a).head, q, true, mark);
    walk_mark(g, g.arc(a).tail, p, false, mark);
  }
  return mark;
}

inline bool feasible(const deds::Instance& inst, const std::vector<ArcId>& k) {
  auto d = dominated(inst.g, inst.p, inst.q, k);
  for (ArcId a = 0; a < inst.g.num_arcs(); ++a)
    if (!d[static_cast<std::size_t>(a)] && !inst.is_optional(a)) return false;
  return true;
}

// Minimum solution size by scanning all 2^m subsets (m <= 20).
inline int min_size(const deds::Instance& inst) {
  const int m = inst.g.num_arcs();
  // Precompute per-arc domination masks over the walk oracle.
  std::vector<std::uint32_t> dom(static_cast<std::size_t>(m), 0);
  std::uint32_t need = 0;
  for (ArcId a = 0; a < m; ++a) {
    auto d = dominated(inst.g, inst.p, inst.q, {a});
    for (ArcId b = 0; b < m; ++b)
      if (d[static_cast<std::size_t>(b)]) dom[static_cast<std::size_t>(a)] |= 1u << b;
    if (!inst.is_optional(a)) need |= 1u << a;
  }
  int best = m;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int c = std::popcount(mask);
    if (c >= best) continue;
    std::uint32_t cov = 0;
    for (int a = 0; a < m; ++a)
      if (mask >> a & 1) cov |= dom[static_cast<std::size_t>(a)];
    if ((cov & need) == need) best = c;
  }
  return best;
}

// Minimum solution size by trying subsets in order of size (m <= 64).
// Returns -1 when nothing of size <= cap works.
inline int min_size_upto(const deds::Instance& inst, int cap) {
  const int m = inst.g.num_arcs();
  std::vector<std::uint64_t> dom(static_cast<std::size_t>(m), 0);
  std::uint64_t need = 0;
  for (ArcId a = 0; a < m; ++a) {
    auto d = dominated(inst.g, inst.p, inst.q, {a});
    for (ArcId b = 0; b < m; ++b)
      if (d[static_cast<std::size_t>(b)]) dom[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    if (!inst.is_optional(a)) need |= std::uint64_t{1} << a;
  }
  std::function<bool(int, int, std::uint64_t)> pick = [&](int from, int left, std::uint64_t cov) {
    if ((cov & need) == need) return true;
    if (left == 0) return false;
    for (int a = from; a < m; ++a)
      if (pick(a + 1, left - 1, cov | dom[static_cast<std::size_t>(a)])) return true;
    return false;
  };
  for (int s = 0; s <= std::min(cap, m); ++s)
    if (pick(0, s, 0)) return s;
  return -1;
}

// Minimum dominating set size by scanning vertex subsets (n <= 20).
inline int min_dominating_set(const Digraph& g) {
  const int n = g.num_vertices();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int c = std::popcount(mask);
    if (c >= best) continue;
    std::uint32_t covered = mask;
    for (const Arc& e : g.arcs())
      if (mask >> e.tail & 1) covered |= 1u << e.head;
    if (covered == (1u << n) - 1) best = c;
  }
  return best;
}

// Maximum independent set size of an undirected graph (n <= 20).
inline int max_independent_set(const deds::UndirectedGraph& u) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << u.n); ++mask) {
    bool ok = true;
    for (auto [a, b] : u.edges)
      if ((mask >> a & 1) && (mask >> b & 1)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline Digraph random_digraph(std::mt19937_64& rng, int n, int max_arcs) {
  std::vector<Arc> all;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) all.push_back({u, v});
  std::shuffle(all.begin(), all.end(), rng);
  int m = static_cast<int>(rng() % static_cast<std::uint64_t>(std::min<int>(max_arcs, static_cast<int>(all.size())) + 1));
  all.resize(static_cast<std::size_t>(m));
  return Digraph(n, all);
}

inline deds::Tournament random_tournament(std::mt19937_64& rng, int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      arcs.push_back(rng() & 1 ? Arc{u, v} : Arc{v, u});
  return deds::Tournament(Digraph(n, arcs));
}

inline Digraph path(int n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v + 1 < n; ++v) arcs.push_back({v, v + 1});
  return Digraph(n, arcs);
}

inline Digraph cycle(int n) {
  std::vector<Arc> arcs;
  for (Vertex v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph(n, arcs);
}

inline Digraph transitive(int n) {
  std::vector<Arc> arcs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) arcs.push_back({u, v});
  return Digraph(n, arcs);
}

inline Digraph out_star(int leaves) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v <= leaves; ++v) arcs.push_back({0, v});
  return Digraph(leaves + 1, arcs);
}

}  // namespace ref
