#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace deds {

struct TreeDecomposition {
  int n = 0;  // vertices of the decomposed graph
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> edges;  // between bag indices

  int width() const;
};

// Throws InputError naming the violated property: tree shape, vertex
// coverage, running intersection, or (when g is given) arc coverage.
void validate(const TreeDecomposition& td);
void validate(const TreeDecomposition& td, const Digraph& g);

// PACE-style text: `s td <bags> <max bag size> <n>`, `b <id> <v...>`, edges
// `<id> <id>`, comments `c ...`. Bag ids and vertices are 1-based on disk.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& td);

// Min-degree elimination on the underlying undirected graph.
TreeDecomposition heuristic_td(const Digraph& g);

enum class NiceKind : std::uint8_t { leaf, introduce, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  std::vector<Vertex> bag;  // sorted
  Vertex vertex = -1;       // introduced / forgotten vertex, or the leaf vertex
  int left = -1, right = -1;
};

// Nodes are stored children-first; the last node is the root, whose bag is empty.
struct NiceTreeDecomposition {
  int n = 0;
  std::vector<NiceNode> nodes;

  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td);

struct TwdpOptions {
  std::uint64_t memory_limit_bytes = std::uint64_t{2} << 30;
};

struct TwdpStats {
  std::size_t max_table = 0;     // largest table over all nodes
  std::size_t total_entries = 0;
  // Largest table size divided by (4(p+1)(q+1))^(bag size); <= 1 always.
  double max_table_ratio = 0.0;
  bool table_bound_ok = true;
};

struct TwdpResult {
  int opt = 0;
  Solution solution;
  TwdpStats stats;
};

// Exact minimum (p,q)-dEDS (optional arcs honoured) by dynamic programming
// over a nice tree decomposition of the underlying graph of inst.g.
TwdpResult solve_twdp(const Instance& inst, const NiceTreeDecomposition& ntd, TwdpOptions options = {});

}  // namespace deds
