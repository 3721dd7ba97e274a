#pragma once

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace deds {

// Sources (in-degree 0, isolated vertices included), sinks (out-degree 0 with
// an in-arc) and the rest.
struct SourceSinkPartition {
  std::vector<Vertex> sources, sinks, rest;
  std::vector<char> kind;  // per vertex: 'S', 'T' or 'R'
};

SourceSinkPartition partition_sources_sinks(const Digraph& g);

struct Approx01Result {
  Solution solution;
  int k1 = 0;       // δ+(S)
  int k2 = 0;       // one in-arc per R ∩ N−(T) vertex outside N+(S)
  int matching = 0; // |M|
  int i_plus = 0;   // unmatched non-sinks of the residual graph
};

struct Approx11Result {
  Solution solution;
  int source_sink = 0;  // δ(S,T)
  int after_source = 0; // |R ∩ N+(S)|
  int before_sink = 0;  // |R ∩ N−(T)|
  int matching = 0;     // |M|
};

// (0,1)-dEDS within a factor 3 of optimal.
Approx01Result approx_01(const Digraph& g);
// (1,1)-dEDS within a factor 8 of optimal.
Approx11Result approx_11(const Digraph& g);

}  // namespace deds
