#include "deds/domination.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "deds/error.hpp"

namespace deds {

Instance::Instance(Digraph g_, int p_, int q_, std::optional<int> budget_,
                   std::vector<char> optional_)
    : g(std::move(g_)), p(p_), q(q_), budget(budget_), optional(std::move(optional_)) {
  if (p < 0 || q < 0) throw InputError("p and q must be non-negative");
  if (budget && *budget < 0) throw InputError("budget must be non-negative");
  if (!optional.empty() && optional.size() != static_cast<std::size_t>(g.num_arcs()))
    throw InputError("optional mask size does not match arc count");
}

bool Instance::has_optional_arcs() const {
  return std::any_of(optional.begin(), optional.end(), [](char c) { return c != 0; });
}

Instance Instance::dual() const { return Instance(g.reversed(), q, p, budget, optional); }

void normalize_arcs(std::vector<ArcId>& arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

namespace {

// Multi-source BFS up to `depth`; marks every vertex within that distance.
template <bool Forward>
std::vector<char> within(const Digraph& g, const std::vector<Vertex>& sources, int depth) {
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> dist(n, kUnreachable);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[static_cast<std::size_t>(s)] == 0) continue;
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int d = dist[static_cast<std::size_t>(v)];
    if (d >= depth) continue;
    for (ArcId a : Forward ? g.out_arcs(v) : g.in_arcs(v)) {
      Vertex w = Forward ? g.arc(a).head : g.arc(a).tail;
      if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
        dist[static_cast<std::size_t>(w)] = d + 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<char> mark(n, 0);
  for (std::size_t v = 0; v < n; ++v) mark[v] = dist[v] <= depth;
  return mark;
}

void check_range(const Digraph& g, std::span<const ArcId> arcs) {
  for (ArcId a : arcs)
    if (a < 0 || a >= g.num_arcs())
      throw InputError("solution arc index " + std::to_string(a) + " out of range");
}

}  // namespace

std::vector<char> dominated_arcs(const Digraph& g, int p, int q, std::span<const ArcId> k_set) {
  check_range(g, k_set);
  std::vector<char> dom(static_cast<std::size_t>(g.num_arcs()), 0);
  if (k_set.empty()) return dom;
  for (ArcId a : k_set) dom[static_cast<std::size_t>(a)] = 1;

  // (x,y) is reached forward when dist(v,x) <= q-1 for a selected (u,v),
  // backward when dist(y,u) <= p-1.
  if (q >= 1) {
    std::vector<Vertex> heads;
    for (ArcId a : k_set) heads.push_back(g.arc(a).head);
    auto near = within<true>(g, heads, q - 1);
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (near[static_cast<std::size_t>(g.arc(a).tail)]) dom[static_cast<std::size_t>(a)] = 1;
  }
  if (p >= 1) {
    std::vector<Vertex> tails;
    for (ArcId a : k_set) tails.push_back(g.arc(a).tail);
    auto near = within<false>(g, tails, p - 1);
    for (ArcId a = 0; a < g.num_arcs(); ++a)
      if (near[static_cast<std::size_t>(g.arc(a).head)]) dom[static_cast<std::size_t>(a)] = 1;
  }
  return dom;
}

std::vector<char> dominated_by_arc(const Digraph& g, int p, int q, ArcId a) {
  const ArcId one[] = {a};
  return dominated_arcs(g, p, q, one);
}

std::vector<ArcId> undominated_arcs(const Instance& inst, std::span<const ArcId> k_set) {
  auto dom = dominated_arcs(inst, k_set);
  std::vector<ArcId> missing;
  for (ArcId a = 0; a < inst.g.num_arcs(); ++a)
    if (!dom[static_cast<std::size_t>(a)] && !inst.is_optional(a)) missing.push_back(a);
  return missing;
}

bool verify(const Instance& inst, std::span<const ArcId> arcs) {
  check_range(inst.g, arcs);
  std::vector<ArcId> distinct(arcs.begin(), arcs.end());
  normalize_arcs(distinct);
  if (inst.budget && static_cast<int>(distinct.size()) > *inst.budget) return false;
  return undominated_arcs(inst, distinct).empty();
}

}  // namespace deds
