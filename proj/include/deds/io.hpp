#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "deds/graph.hpp"

namespace deds {

struct GraphFile {
  Digraph g;
  std::vector<char> optional;  // empty when no arc is marked `opt`
};

// Graph text format: `n m`, then m lines `u v` or `u v opt`. `#` starts a comment.
GraphFile read_graph(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Digraph& g, std::span<const char> optional = {});
void write_graph_file(const std::string& path, const Digraph& g,
                      std::span<const char> optional = {});

// Solution text format: `k <size>`, then `u v` per arc. Arcs must exist in g.
std::vector<ArcId> read_solution(std::istream& in, const Digraph& g);
std::vector<ArcId> read_solution_file(const std::string& path, const Digraph& g);
void write_solution(std::ostream& out, const Digraph& g, std::span<const ArcId> arcs);

}  // namespace deds
