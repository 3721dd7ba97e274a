#pragma once

#include <cstdint>
#include <optional>

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace deds {

struct FptStats {
  std::uint64_t nodes = 0;   // recursive calls
  std::uint64_t leaves = 0;  // completion phases reached
  int max_depth = 0;
};

enum class Completion11 {
  // Cheapest way to meet the degree guesses using any arc of G.
  requirement_cover,
  // Bipartite edge cover restricted to arcs between marked vertices.
  edge_cover,
};

struct Fpt11Options {
  Completion11 completion = Completion11::requirement_cover;
};

// Minimum (1,1)-dEDS of size <= k, or nullopt. Branches on degree profiles.
std::optional<Solution> solve_11(const Digraph& g, int k, FptStats* stats = nullptr,
                                 Fpt11Options options = {});

// Minimum (0,1)-dEDS of size <= k, or nullopt.
std::optional<Solution> solve_01(const Digraph& g, int k, FptStats* stats = nullptr);

}  // namespace deds
