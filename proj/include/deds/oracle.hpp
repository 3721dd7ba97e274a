#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace deds {

struct OracleLimits {
  // Ceiling on the number of arc subsets examined, summed over all sizes.
  std::uint64_t subset_limit = 50'000'000;
};

// Minimum feasible solution of size <= k_max by plain subset enumeration,
// sizes ascending and lexicographic within a size. Ignores inst.budget.
// Throws ResourceError when the enumeration would exceed the limit.
std::optional<Solution> exact_min_deds(const Instance& inst, int k_max, OracleLimits limits = {});

struct BranchingLimits {
  std::uint64_t node_limit = 200'000'000;
};

// Minimum solution by hitting-set branching, for instances with too many arcs
// to enumerate (the reduction generators). Arcs in `forbidden` may not be
// selected. Same contract as exact_min_deds otherwise.
std::optional<Solution> exact_min_deds_branching(const Instance& inst, int k_max,
                                                 std::span<const ArcId> forbidden = {},
                                                 BranchingLimits limits = {});

struct VertexSetResult {
  int size = 0;
  std::vector<Vertex> vertices;
};

// Maximum almost induced matching: largest S inducing maximum degree <= 1.
VertexSetResult exact_aim(const UndirectedGraph& u, int vertex_limit = 24);

// Minimum dominating set: every vertex outside D has an in-neighbour in D.
VertexSetResult exact_ds(const Digraph& g, int vertex_limit = 24);

}  // namespace deds
