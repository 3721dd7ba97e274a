#include <cmath>
#include <random>

#include "doctest.h"
#include "deds/error.hpp"
#include "deds/tournament.hpp"
#include "oracles.hpp"

using namespace deds;

namespace {

int opt(const Tournament& t, int p, int q) { return ref::min_size(Instance(t.graph(), p, q)); }

bool has_source(const Digraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (g.in_degree(v) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("transitive tournament examples") {
  Tournament t4(ref::transitive(4));
  CHECK(solve_t01(t4).size() == 3);
  auto s33 = solve_t_pq3(t4, 3, 3);
  CHECK(s33.size() == 3);
  CHECK(verify(Instance(t4.graph(), 3, 3), s33));
  Tournament t3(ref::transitive(3));
  CHECK(solve_t_pq3(t3, 3, 3).size() == opt(t3, 3, 3));
  Tournament c3(ref::cycle(3));
  CHECK(solve_t_pq3(c3, 0, 3).size() == 1);
}

TEST_CASE("wrong engine and limits are reported") {
  Tournament t(ref::transitive(4));
  CHECK_THROWS_AS(solve_t_pq3(t, 2, 3), InputError);
  CHECK_THROWS_AS(solve_t_pq3(t, 1, 1), InputError);
  CHECK_THROWS_AS(solve_t_q2(t, 1, 3), InputError);
  std::mt19937_64 rng(1);
  CHECK_THROWS_AS(solve_t_q2(ref::random_tournament(rng, 13), 2, 2), ResourceError);
  CHECK_THROWS_AS(ds_to_02(t, std::vector<Vertex>{0}), InputError);
  CHECK_THROWS_AS(ds_to_p2_instance(t), InputError);
}

TEST_CASE("classification") {
  Tournament t(ref::cycle(3));
  CHECK(classify(t, 0, 1) == "solve_t01");
  CHECK(classify(t, 1, 0) == "solve_t01");
  CHECK(classify(t, 1, 1) == "fpt11");
  CHECK(classify(t, 4, 2) == "solve_t_q2");
  CHECK(classify(t, 0, 3) == "solve_t_pq3");
}

TEST_CASE("tournament solvers match brute force") {
  std::mt19937_64 rng(2024);
  const std::pair<int, int> pq3[] = {{0, 3}, {3, 0}, {1, 3}, {3, 3}, {4, 3}, {3, 1}};
  const std::pair<int, int> q2[] = {{0, 2}, {1, 2}, {2, 2}, {2, 0}, {3, 2}};
  for (int n = 2; n <= 6; ++n) {
    for (int it = 0; it < 25; ++it) {
      auto t = ref::random_tournament(rng, n);
      const auto& g = t.graph();
      auto s01 = solve_t01(t);
      CHECK(s01.size() == n - 1);
      CHECK(ref::feasible(Instance(g, 0, 1), s01.arcs));
      CHECK(opt(t, 0, 1) == n - 1);
      for (auto [p, q] : pq3) {
        auto sol = solve_t_pq3(t, p, q);
        CHECK(ref::feasible(Instance(g, p, q), sol.arcs));
        CHECK(sol.size() == opt(t, p, q));
      }
      for (auto [p, q] : q2) {
        auto sol = solve_t_q2(t, p, q);
        CHECK(ref::feasible(Instance(g, p, q), sol.arcs));
        CHECK(sol.size() == opt(t, p, q));
      }
      for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
          auto sol = solve_tournament(t, p, q);
          CHECK(sol.size() == opt(t, p, q));
        }
    }
  }
}

TEST_CASE("dominating sets give (0,2) and (p,2) solutions") {
  std::mt19937_64 rng(77);
  int tested = 0;
  while (tested < 60) {
    auto t = ref::random_tournament(rng, 3 + static_cast<int>(rng() % 4));
    if (has_source(t.graph())) continue;
    ++tested;
    auto ds = greedy_dominating_set(t);
    auto sol = ds_to_02(t, ds);
    CHECK(sol.size() <= static_cast<int>(ds.size()));
    CHECK(ref::feasible(Instance(t.graph(), 0, 2), sol.arcs));
    CHECK(opt(t, 0, 2) <= exact_ds(t.graph()).size);

    auto big = ds_to_p2_instance(t);
    CHECK(big.num_vertices() == t.num_vertices() + 1);
    CHECK(big.graph().in_degree(t.num_vertices()) == t.num_vertices());
  }
}

TEST_CASE("greedy dominating set and (2,2) construction stay logarithmic") {
  std::mt19937_64 rng(5);
  for (int n : {2, 3, 5, 8, 16, 33, 64, 100, 128, 256}) {
    for (int it = 0; it < 4; ++it) {
      auto t = it == 0 ? Tournament(ref::transitive(n)) : ref::random_tournament(rng, n);
      auto ds = greedy_dominating_set(t);
      CHECK(static_cast<int>(ds.size()) <= static_cast<int>(std::floor(std::log2(n))) + 1);
      auto sol = bounded_22_solution(t);
      CHECK(verify(Instance(t.graph(), 2, 2), sol));
      CHECK(sol.size() <= 2 * std::log2(n) + 3);
    }
  }
}
