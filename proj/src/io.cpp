#include "deds/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "deds/error.hpp"

namespace deds {

namespace {

// Next non-empty line with comments stripped; false at EOF.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

[[noreturn]] void fail(int lineno, const std::string& what) {
  throw InputError("line " + std::to_string(lineno) + ": " + what);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  return f;
}

}  // namespace

GraphFile read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw InputError("empty graph file");
  long long n = -1, m = -1;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra) || n < 0 || m < 0) fail(lineno, "expected header `n m`");
  }
  std::vector<Arc> arcs;
  std::vector<char> optional;
  bool any_optional = false;
  arcs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) throw InputError("expected " + std::to_string(m) + " arcs, got " + std::to_string(i));
    std::istringstream ss(line);
    long long u, v;
    std::string tag, extra;
    if (!(ss >> u >> v)) fail(lineno, "expected `u v [opt]`");
    bool opt = false;
    if (ss >> tag) {
      if (tag != "opt") fail(lineno, "unknown arc tag `" + tag + "`");
      opt = true;
    }
    if (ss >> extra) fail(lineno, "trailing tokens");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(lineno, "vertex out of range");
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    optional.push_back(opt ? 1 : 0);
    any_optional = any_optional || opt;
  }
  if (next_line(in, line, lineno)) fail(lineno, "more arc lines than the header declares");
  GraphFile out{Digraph(static_cast<int>(n), std::move(arcs)), {}};
  if (any_optional) out.optional = std::move(optional);
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  auto f = open_in(path);
  return read_graph(f);
}

void write_graph(std::ostream& out, const Digraph& g, std::span<const char> optional) {
  out << g.num_vertices() << ' ' << g.num_arcs() << '\n';
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    out << g.arc(a).tail << ' ' << g.arc(a).head;
    if (!optional.empty() && optional[static_cast<std::size_t>(a)]) out << " opt";
    out << '\n';
  }
}

void write_graph_file(const std::string& path, const Digraph& g, std::span<const char> optional) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  write_graph(f, g, optional);
}

std::vector<ArcId> read_solution(std::istream& in, const Digraph& g) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw InputError("empty solution file");
  long long k = -1;
  {
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word >> k) || word != "k" || k < 0) fail(lineno, "expected header `k <size>`");
  }
  std::vector<ArcId> arcs;
  for (long long i = 0; i < k; ++i) {
    if (!next_line(in, line, lineno)) throw InputError("solution lists fewer arcs than its header");
    std::istringstream ss(line);
    long long u, v;
    if (!(ss >> u >> v)) fail(lineno, "expected `u v`");
    if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
      fail(lineno, "vertex out of range");
    auto a = g.find_arc(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!a) fail(lineno, "arc " + std::to_string(u) + " " + std::to_string(v) + " is not in the graph");
    arcs.push_back(*a);
  }
  if (next_line(in, line, lineno)) fail(lineno, "more arcs than the header declares");
  return arcs;
}

std::vector<ArcId> read_solution_file(const std::string& path, const Digraph& g) {
  auto f = open_in(path);
  return read_solution(f, g);
}

void write_solution(std::ostream& out, const Digraph& g, std::span<const ArcId> arcs) {
  out << "k " << arcs.size() << '\n';
  for (ArcId a : arcs) out << g.arc(a).tail << ' ' << g.arc(a).head << '\n';
}

}  // namespace deds
