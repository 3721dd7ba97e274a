#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace deds {

using Vertex = std::int32_t;
using ArcId = std::int32_t;
using EdgeId = std::int32_t;

// Distance value for vertices that cannot be reached. Larger than any path length.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable directed graph without self-loops or parallel arcs.
//
// Arcs keep the index they were given at construction; all per-vertex
// adjacency lists are sorted by arc index, which is what every greedy
// procedure in the library iterates over.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  int num_vertices() const { return n_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
  std::span<const Arc> arcs() const { return arcs_; }

  std::span<const ArcId> out_arcs(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const ArcId> in_arcs(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_arcs(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_arcs(v).size()); }

  std::optional<ArcId> find_arc(Vertex tail, Vertex head) const;
  bool has_arc(Vertex tail, Vertex head) const { return find_arc(tail, head).has_value(); }

  // Every arc flipped; arc i of the result is arc i of this graph reversed.
  Digraph reversed() const;

  bool is_tournament() const;

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::unordered_map<std::uint64_t, ArcId> index_;
};

// A Digraph known to have exactly one arc between every pair of vertices.
class Tournament {
 public:
  // Throws InputError unless g is a tournament.
  explicit Tournament(Digraph g);

  const Digraph& graph() const { return g_; }
  int num_vertices() const { return g_.num_vertices(); }
  Tournament reversed() const { return Tournament(g_.reversed()); }

 private:
  Digraph g_;
};

// Simple undirected graph given by an edge list. Used for matchings,
// the almost-induced-matching oracle and reduction inputs.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  UndirectedGraph() = default;
  UndirectedGraph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::vector<std::vector<Vertex>> adjacency() const;
  int max_degree() const;
};

// The underlying undirected graph of a Digraph. Antiparallel arcs collapse
// to one edge, represented by the lower arc index.
struct UndirectedView {
  UndirectedGraph graph;
  std::vector<ArcId> edge_arc;   // edge -> representative arc
  std::vector<EdgeId> arc_edge;  // arc -> edge

  explicit UndirectedView(const Digraph& g);
};

// Strongly connected components in topological order: every arc between
// components i < j goes from i to j. Each component is sorted.
std::vector<std::vector<Vertex>> scc_partition(const Digraph& g);

// BFS distances from s (kUnreachable where no path). Exploration stops at
// max_depth when given.
std::vector<int> dist_from(const Digraph& g, Vertex s, int max_depth = kUnreachable);
// Distances to t, i.e. BFS on the reversed graph.
std::vector<int> dist_to(const Digraph& g, Vertex t, int max_depth = kUnreachable);
// All-pairs distance matrix, row-major: d[u * n + v] = dist(u, v).
std::vector<int> all_pairs_distances(const Digraph& g);

// Greedy maximal matching over edges in index order.
std::vector<EdgeId> maximal_matching(const UndirectedGraph& u);

// Maximum matching in a bipartite graph given by (left, right) pairs.
// Returns, for each left vertex, the index of its matched edge or -1.
std::vector<int> max_bipartite_matching(int n_left, int n_right,
                                        std::span<const std::pair<int, int>> edges);

// Minimum edge cover: a maximum matching plus the lowest-index incident edge
// of every unmatched vertex. Returns edge indices in increasing order.
// Throws InputError when a vertex has no incident edge.
std::vector<std::size_t> min_edge_cover_bipartite(int n_left, int n_right,
                                                  std::span<const std::pair<int, int>> edges);

// Hamiltonian path by insertion; consecutive vertices are joined by forward arcs.
std::vector<Vertex> hamiltonian_path(const Tournament& t);

// Vertex of maximum out-degree, smallest id on ties. Reaches all others in <= 2 steps.
Vertex king(const Tournament& t);

// Greedy dominating set: repeatedly pick the max out-degree vertex of the
// tournament induced on the still-undominated vertices.
std::vector<Vertex> greedy_dominating_set(const Tournament& t);

// Whether `set` dominates g: every vertex outside has an in-neighbour inside.
bool is_dominating_set(const Digraph& g, std::span<const Vertex> set);

}  // namespace deds
