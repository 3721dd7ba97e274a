#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "doctest.h"
#include "deds/error.hpp"
#include "deds/graph.hpp"
#include "oracles.hpp"

using namespace deds;

TEST_CASE("digraph rejects self-loops, parallel arcs and bad ids") {
  CHECK_THROWS_AS(Digraph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), InputError);
  Digraph digon(2, {{0, 1}, {1, 0}});
  CHECK(digon.num_arcs() == 2);
  CHECK(*digon.find_arc(1, 0) == 1);
}

TEST_CASE("reversal keeps arc indices") {
  Digraph g(3, {{0, 1}, {1, 2}});
  auto r = g.reversed();
  CHECK(r.arc(0) == Arc{1, 0});
  CHECK(r.arc(1) == Arc{2, 1});
}

TEST_CASE("scc partition") {
  auto two = scc_partition(Digraph(2, {{0, 1}}));
  CHECK(two == std::vector<std::vector<Vertex>>{{0}, {1}});
  CHECK(scc_partition(ref::cycle(3)) == std::vector<std::vector<Vertex>>{{0, 1, 2}});
  Digraph g(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}});
  CHECK(scc_partition(g) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3}});
  Digraph back(4, {{3, 0}, {0, 1}, {1, 2}, {2, 0}});
  CHECK(scc_partition(back) == std::vector<std::vector<Vertex>>{{3}, {0, 1, 2}});
}

TEST_CASE("scc partition is a topological order of components") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto g = ref::random_digraph(rng, 8, 20);
    auto comps = scc_partition(g);
    std::vector<int> where(8, -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (Vertex v : comps[i]) where[static_cast<std::size_t>(v)] = static_cast<int>(i);
    CHECK(std::count(where.begin(), where.end(), -1) == 0);
    auto d = all_pairs_distances(g);
    for (const auto& e : g.arcs()) CHECK(where[e.tail] <= where[e.head]);
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v) {
        bool same = d[u * 8 + v] != kUnreachable && d[v * 8 + u] != kUnreachable;
        CHECK(same == (where[u] == where[v]));
      }
  }
}

TEST_CASE("bfs distances") {
  auto p = ref::path(3);
  CHECK(dist_from(p, 0) == std::vector<int>{0, 1, 2});
  CHECK(dist_from(p, 2) == std::vector<int>{kUnreachable, kUnreachable, 0});
  CHECK(dist_from(ref::cycle(3), 0) == std::vector<int>{0, 1, 2});
  CHECK(dist_to(p, 2) == std::vector<int>{2, 1, 0});
  CHECK(dist_from(p, 0, 1) == std::vector<int>{0, 1, kUnreachable});
}

TEST_CASE("maximal matching is greedy in edge order") {
  CHECK(maximal_matching(UndirectedGraph(2, {{0, 1}})).size() == 1);
  auto m = maximal_matching(UndirectedGraph(3, {{0, 1}, {1, 2}}));
  CHECK(m == std::vector<EdgeId>{0});
  CHECK(maximal_matching(UndirectedGraph(3, {})).empty());
}

TEST_CASE("undirected view collapses digons") {
  Digraph g(3, {{0, 1}, {1, 2}, {1, 0}});
  UndirectedView u(g);
  CHECK(u.graph.edges.size() == 2);
  CHECK(u.arc_edge[2] == u.arc_edge[0]);
  CHECK(u.edge_arc[0] == 0);
}

TEST_CASE("min edge cover sizes") {
  std::vector<std::pair<int, int>> k11{{0, 0}};
  CHECK(min_edge_cover_bipartite(1, 1, k11).size() == 1);
  std::vector<std::pair<int, int>> k22{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(min_edge_cover_bipartite(2, 2, k22).size() == 2);
  std::vector<std::pair<int, int>> star{{0, 0}, {0, 1}, {0, 2}};
  CHECK(min_edge_cover_bipartite(1, 3, star).size() == 3);
  std::vector<std::pair<int, int>> iso{{0, 0}};
  CHECK_THROWS_AS(min_edge_cover_bipartite(1, 2, iso), InputError);
}

TEST_CASE("min edge cover matches exhaustive search") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    int nl = 1 + static_cast<int>(rng() % 4), nr = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < nl; ++l)
      for (int r = 0; r < nr; ++r)
        if (rng() % 2) edges.emplace_back(l, r);
    bool coverable = true;
    for (int l = 0; l < nl; ++l)
      coverable &= std::any_of(edges.begin(), edges.end(), [&](auto e) { return e.first == l; });
    for (int r = 0; r < nr; ++r)
      coverable &= std::any_of(edges.begin(), edges.end(), [&](auto e) { return e.second == r; });
    if (!coverable) {
      CHECK_THROWS_AS(min_edge_cover_bipartite(nl, nr, edges), InputError);
      continue;
    }
    int best = 100;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
      std::uint32_t lc = 0, rc = 0;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask >> i & 1) {
          lc |= 1u << edges[i].first;
          rc |= 1u << edges[i].second;
        }
      if (lc == (1u << nl) - 1 && rc == (1u << nr) - 1) best = std::min(best, std::popcount(mask));
    }
    auto cover = min_edge_cover_bipartite(nl, nr, edges);
    CHECK(static_cast<int>(cover.size()) == best);
  }
}

TEST_CASE("hamiltonian path, king and greedy dominating set") {
  CHECK(hamiltonian_path(Tournament(Digraph(1))) == std::vector<Vertex>{0});
  CHECK(hamiltonian_path(Tournament(Digraph(2, {{1, 0}}))) == std::vector<Vertex>{1, 0});
  Tournament c3(ref::cycle(3));
  auto hp = hamiltonian_path(c3);
  CHECK(c3.graph().has_arc(hp[0], hp[1]));
  CHECK(c3.graph().has_arc(hp[1], hp[2]));
  CHECK(king(Tournament(Digraph(1))) == 0);
  CHECK(king(Tournament(ref::transitive(3))) == 0);
  CHECK(king(c3) == 0);
  CHECK(greedy_dominating_set(Tournament(Digraph(1))) == std::vector<Vertex>{0});
  CHECK(greedy_dominating_set(c3).size() == 2);

  std::mt19937_64 rng(3);
  for (int n : {2, 5, 9, 33, 200, 1024}) {
    auto t = ref::random_tournament(rng, n);
    auto path = hamiltonian_path(t);
    CHECK(static_cast<int>(path.size()) == n);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(t.graph().has_arc(path[i], path[i + 1]));
    auto k = king(t);
    auto d = dist_from(t.graph(), k);
    CHECK(*std::max_element(d.begin(), d.end()) <= 2);
    auto ds = greedy_dominating_set(t);
    CHECK(is_dominating_set(t.graph(), ds));
    CHECK(static_cast<int>(ds.size()) <= static_cast<int>(std::floor(std::log2(n))) + 1);
  }
}

TEST_CASE("tournament check") {
  CHECK_THROWS_AS(Tournament(Digraph(3, {{0, 1}})), InputError);
  CHECK_THROWS_AS(Tournament(Digraph(2, {{0, 1}, {1, 0}})), InputError);
}
