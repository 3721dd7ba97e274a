#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace deds {

// Seedable, splittable generator. Only raw 64-bit draws are used so output
// does not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next() { return engine_(); }
  bool coin() { return (next() >> 63) != 0; }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Independent stream derived from this generator's seed.
  Rng split(std::uint64_t stream) const;
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

Tournament gen_tournament(int n, std::uint64_t seed);
Digraph gen_digraph(int n, double arc_prob, std::uint64_t seed);

// Multicolored clique input: vertex v^i_j has id i*n + j, classes of size n.
struct McInstance {
  UndirectedGraph graph;
  int k = 0;
  int n = 0;
};

struct ReductionOutput {
  Instance instance;
  int threshold = 0;
  nlohmann::ordered_json lineage;
  // Internal path vertices; every optional arc touches one of them.
  std::vector<Vertex> s_set;
  // The (u1,u2) arc added when optional arcs are removed.
  std::optional<ArcId> anchor_arc;
};

// Optional (3n,3n) instance with a size-k solution iff the graph has a
// multicolored k-clique. Throws InputError for odd n or a non-independent class.
ReductionOutput mcc_to_optional(const McInstance& mc);

// Standard instance with a solution of size k+1 iff r has one of size k.
ReductionOutput optional_to_full(const ReductionOutput& r, std::span<const Vertex> s_set);

struct AimInstance {
  UndirectedGraph graph;
  int L = 0;
};

// Subdivides every edge with three vertices and hangs a pendant off every
// original vertex: independent set >= k iff almost induced matching >= L.
AimInstance is_to_aim(const UndirectedGraph& g, int k);

// g has 2n vertices, A = [0,n), B = [n,2n), all edges between A and B.
// Tournament on A' u B' u C with |C| = 4n; ids of A and B are kept.
ReductionOutput aim_to_tournament(const UndirectedGraph& g, int L, std::uint64_t seed);

// Bipartite graph (same layout as above) of maximum degree 4 without isolated
// vertices that contains a planted almost induced matching: `pairs` matched
// edges and `singles` isolated vertices on each side.
struct PlantedAim {
  UndirectedGraph graph;
  std::vector<Vertex> matched_a, matched_b;  // matched_a[i] -- matched_b[i]
  std::vector<Vertex> single_a, single_b;
  int L = 0;
};
PlantedAim plant_aim(int n, int pairs, int singles, std::uint64_t seed);

// Builds the (1,1) solution for the tournament from a planted matching:
// matched arcs, disjoint paths through C between the singles, and a
// Hamiltonian path of what is left. Empty with a reason when a random
// property it relies on does not hold for this tournament.
struct AimWitness {
  std::optional<std::vector<ArcId>> arcs;
  std::string failure;
};
AimWitness aim_witness(const ReductionOutput& tournament_instance, const PlantedAim& planted);

struct BiasReport {
  int trials = 0;
  int set_size = 0;
  int holds = 0;
  double frequency = 0.0;
};
// Samples disjoint X, Y of size ceil(log2(n)^2) (at most n/2) and counts how
// often some x in X has two out-arcs into Y and some y in Y two in-arcs from X.
BiasReport sample_bias(const Tournament& t, int trials, std::uint64_t seed);

}  // namespace deds
