#include "deds/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>

#include "deds/error.hpp"

namespace deds {

namespace {

using Word = std::uint64_t;

struct Bits {
  std::vector<Word> w;
  explicit Bits(std::size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i / 64] |= Word{1} << (i % 64); }
  bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  void or_into(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  bool covers(const Bits& need) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (need.w[i] & ~w[i]) return false;
    return true;
  }
};

std::uint64_t saturating_binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::optional<Solution> exact_min_deds(const Instance& inst, int k_max, OracleLimits limits) {
  auto t0 = std::chrono::steady_clock::now();
  const auto m = static_cast<std::size_t>(inst.g.num_arcs());
  Bits need(m);
  for (ArcId a = 0; a < inst.g.num_arcs(); ++a)
    if (!inst.is_optional(a)) need.set(static_cast<std::size_t>(a));
  std::vector<Bits> dom(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a) {
    auto d = dominated_by_arc(inst.g, inst.p, inst.q, static_cast<ArcId>(a));
    for (std::size_t b = 0; b < m; ++b)
      if (d[b]) dom[a].set(b);
  }

  std::uint64_t work = 0;
  k_max = std::min<int>(k_max, static_cast<int>(m));
  for (int s = 0; s <= k_max; ++s) {
    auto here = saturating_binom(m, static_cast<std::uint64_t>(s));
    if (here > limits.subset_limit || work + here > limits.subset_limit)
      throw ResourceError("oracle subset limit exceeded at size " + std::to_string(s));
    work += here;
    if (s == 0) {
      if (Bits(m).covers(need)) return Solution{{}, "oracle", ms_since(t0)};
      continue;
    }
    // Combinations in lexicographic order, with the OR of each prefix cached.
    std::vector<std::size_t> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::vector<Bits> prefix(static_cast<std::size_t>(s) + 1, Bits(m));
    std::size_t valid = 0;  // prefix[0..valid] are up to date
    while (true) {
      for (std::size_t i = valid; i < idx.size(); ++i) {
        prefix[i + 1] = prefix[i];
        prefix[i + 1].or_into(dom[idx[i]]);
      }
      if (prefix[idx.size()].covers(need)) {
        Solution sol{{}, "oracle", 0.0};
        for (auto i : idx) sol.arcs.push_back(static_cast<ArcId>(i));
        sol.elapsed_ms = ms_since(t0);
        return sol;
      }
      std::size_t i = idx.size();
      while (i > 0 && idx[i - 1] == m - idx.size() + (i - 1)) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
      valid = i - 1;
    }
  }
  return std::nullopt;
}

namespace {

struct HittingSearch {
  const Instance& inst;
  std::size_t m;
  std::vector<Bits> dom;                   // arc -> arcs it dominates
  std::vector<std::vector<ArcId>> doms_of; // mandatory arc -> arcs dominating it
  std::vector<ArcId> mandatory;
  std::vector<char> banned;
  std::vector<ArcId> chosen;
  std::uint64_t nodes = 0;
  std::uint64_t node_limit;

  bool search(int budget, Bits covered) {
    if (++nodes > node_limit) throw ResourceError("branching oracle node limit exceeded");
    // Undominated mandatory arc with the fewest usable dominators.
    ArcId pick = -1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (ArcId e : mandatory) {
      if (covered.test(static_cast<std::size_t>(e))) continue;
      if (budget == 0) return false;
      std::size_t usable = 0;
      for (ArcId a : doms_of[static_cast<std::size_t>(e)]) usable += !banned[static_cast<std::size_t>(a)];
      if (usable < best) {
        best = usable;
        pick = e;
        if (usable == 0) return false;
      }
    }
    if (pick < 0) return true;
    // Branch i takes the i-th dominator and bans the earlier ones: any
    // solution using one of those was already explored.
    std::vector<ArcId> newly_banned;
    bool found = false;
    for (ArcId a : doms_of[static_cast<std::size_t>(pick)]) {
      if (banned[static_cast<std::size_t>(a)]) continue;
      Bits next = covered;
      next.or_into(dom[static_cast<std::size_t>(a)]);
      chosen.push_back(a);
      if (search(budget - 1, std::move(next))) {
        found = true;
        break;
      }
      chosen.pop_back();
      banned[static_cast<std::size_t>(a)] = 1;
      newly_banned.push_back(a);
    }
    for (ArcId a : newly_banned) banned[static_cast<std::size_t>(a)] = 0;
    return found;
  }
};

}  // namespace

std::optional<Solution> exact_min_deds_branching(const Instance& inst, int k_max,
                                                 std::span<const ArcId> forbidden,
                                                 BranchingLimits limits) {
  auto t0 = std::chrono::steady_clock::now();
  const auto m = static_cast<std::size_t>(inst.g.num_arcs());
  HittingSearch hs{inst, m, std::vector<Bits>(m, Bits(m)), std::vector<std::vector<ArcId>>(m),
                   {}, std::vector<char>(m, 0), {}, 0, limits.node_limit};
  for (ArcId a : forbidden) {
    if (a < 0 || static_cast<std::size_t>(a) >= m) throw InputError("forbidden arc out of range");
    hs.banned[static_cast<std::size_t>(a)] = 1;
  }
  for (std::size_t a = 0; a < m; ++a) {
    auto d = dominated_by_arc(inst.g, inst.p, inst.q, static_cast<ArcId>(a));
    for (std::size_t b = 0; b < m; ++b) {
      if (!d[b]) continue;
      hs.dom[a].set(b);
      if (!inst.is_optional(static_cast<ArcId>(b))) hs.doms_of[b].push_back(static_cast<ArcId>(a));
    }
  }
  for (ArcId a = 0; a < inst.g.num_arcs(); ++a)
    if (!inst.is_optional(a)) hs.mandatory.push_back(a);

  for (int budget = 0; budget <= k_max; ++budget) {
    hs.chosen.clear();
    if (hs.search(budget, Bits(m))) {
      Solution sol{hs.chosen, "oracle-branching", 0.0};
      normalize_arcs(sol.arcs);
      sol.elapsed_ms = ms_since(t0);
      return sol;
    }
  }
  return std::nullopt;
}

VertexSetResult exact_aim(const UndirectedGraph& u, int vertex_limit) {
  if (u.n > vertex_limit)
    throw ResourceError("AIM oracle limited to " + std::to_string(vertex_limit) + " vertices");
  auto adj = u.adjacency();
  const auto n = static_cast<std::size_t>(u.n);
  std::vector<char> in(n, 0);
  std::vector<int> deg(n, 0);  // neighbours currently in S
  std::vector<Vertex> best;
  int current = 0;

  // Decide vertices in id order; a vertex may join if it and its chosen
  // neighbours keep induced degree <= 1.
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (current + static_cast<int>(n - v) <= static_cast<int>(best.size())) return;
    if (v == n) {
      best.clear();
      for (std::size_t i = 0; i < n; ++i)
        if (in[i]) best.push_back(static_cast<Vertex>(i));
      return;
    }
    bool ok = deg[v] <= 1;
    if (ok)
      for (Vertex w : adj[v])
        if (in[static_cast<std::size_t>(w)] && deg[static_cast<std::size_t>(w)] >= 1) ok = false;
    if (ok) {
      in[v] = 1;
      ++current;
      for (Vertex w : adj[v]) ++deg[static_cast<std::size_t>(w)];
      self(self, v + 1);
      for (Vertex w : adj[v]) --deg[static_cast<std::size_t>(w)];
      --current;
      in[v] = 0;
    }
    self(self, v + 1);
  };
  rec(rec, 0);
  return {static_cast<int>(best.size()), best};
}

VertexSetResult exact_ds(const Digraph& g, int vertex_limit) {
  if (g.num_vertices() > vertex_limit || g.num_vertices() > 62)
    throw ResourceError("dominating set oracle limited to " + std::to_string(vertex_limit) + " vertices");
  const int n = g.num_vertices();
  if (n == 0) return {};
  std::vector<Word> closed(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    closed[static_cast<std::size_t>(v)] = Word{1} << v;
    for (ArcId a : g.out_arcs(v)) closed[static_cast<std::size_t>(v)] |= Word{1} << g.arc(a).head;
  }
  const Word all = (n == 64) ? ~Word{0} : (Word{1} << n) - 1;
  for (int s = 1; s <= n; ++s) {
    std::vector<int> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Word cov = 0;
      for (int i : idx) cov |= closed[static_cast<std::size_t>(i)];
      if (cov == all) return {s, std::vector<Vertex>(idx.begin(), idx.end())};
      int i = s;
      while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - s + i - 1) --i;
      if (i == 0) break;
      ++idx[static_cast<std::size_t>(i - 1)];
      for (int j = i; j < s; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return {n, {}};  // unreachable: V itself dominates
}

}  // namespace deds
