#pragma once

#include <span>
#include <string>
#include <vector>

#include "deds/domination.hpp"
#include "deds/graph.hpp"
#include "deds/oracle.hpp"

namespace deds {

// Optimal (0,1)-dEDS of a tournament; always n - 1 arcs.
Solution solve_t01(const Tournament& t);

// Optimal solution when max{p,q} >= 3 and neither equals 2.
// Throws InputError for other (p,q).
Solution solve_t_pq3(const Tournament& t, int p, int q);

struct TQ2Options {
  int vertex_limit = 12;
  OracleLimits limits;
};

// Optimal solution when p = 2 or q = 2, by arc-subset search up to the
// known upper bounds. Throws ResourceError above the vertex limit.
Solution solve_t_q2(const Tournament& t, int p, int q, TQ2Options options = {});

// One in-arc (lowest index) per vertex of a dominating set of a sourceless
// tournament: a (0,2)-dEDS of size <= |d|.
Solution ds_to_02(const Tournament& t, std::span<const Vertex> d);

// Adds a sink (vertex n) receiving an arc from every vertex. Requires no source.
Tournament ds_to_p2_instance(const Tournament& t);

// Solver name for (p,q) on tournaments: solve_t01, fpt11, solve_t_q2 or solve_t_pq3.
std::string classify(const Tournament& t, int p, int q);

// (2,2)-dEDS of size at most 2 log2(n) + 3 built from greedy dominating sets.
Solution bounded_22_solution(const Tournament& t);

// Routes to the right solver; (0,0), (1,0) and (1,1) included.
Solution solve_tournament(const Tournament& t, int p, int q);

// Sub-tournament induced by `keep` (ascending); vertex i maps to keep[i].
Tournament induced_tournament(const Tournament& t, const std::vector<Vertex>& keep);

}  // namespace deds
