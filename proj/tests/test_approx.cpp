#include <random>

#include "doctest.h"
#include "deds/approx.hpp"
#include "oracles.hpp"

using namespace deds;

TEST_CASE("approximation examples") {
  auto star = approx_01(ref::out_star(3));
  CHECK(star.solution.arcs == std::vector<ArcId>{0, 1, 2});
  Digraph arc(2, {{0, 1}});
  CHECK(approx_01(arc).solution.size() == 1);
  CHECK(approx_11(arc).solution.arcs == std::vector<ArcId>{0});
  auto c3 = approx_11(ref::cycle(3));
  CHECK(verify(Instance(ref::cycle(3), 1, 1), c3.solution));
  CHECK(c3.solution.size() <= 8);
}

TEST_CASE("partition puts isolated vertices with the sources") {
  auto part = partition_sources_sinks(Digraph(3, {{0, 1}}));
  CHECK(part.sources == std::vector<Vertex>{0, 2});
  CHECK(part.sinks == std::vector<Vertex>{1});
}

TEST_CASE("approximations are feasible and within their ratios") {
  std::mt19937_64 rng(44);
  for (int it = 0; it < 300; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto g = ref::random_digraph(rng, n, 14);
    auto a01 = approx_01(g);
    Instance i01(g, 0, 1);
    CHECK(ref::feasible(i01, a01.solution.arcs));
    CHECK(a01.solution.size() <= 3 * ref::min_size(i01));
    CHECK(a01.solution.size() <= a01.k1 + a01.k2 + 2 * a01.matching + a01.i_plus);
    auto a11 = approx_11(g);
    Instance i11(g, 1, 1);
    CHECK(ref::feasible(i11, a11.solution.arcs));
    CHECK(a11.solution.size() <= 8 * ref::min_size(i11));
    CHECK(a11.solution.size() <= a11.source_sink + a11.after_source + a11.before_sink + 3 * a11.matching);
  }
}
