#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "deds/graph.hpp"

namespace deds {

struct Instance {
  Digraph g;
  int p = 0;
  int q = 0;
  std::optional<int> budget;
  // optional[a] != 0 means arc a need not be dominated. Empty = all mandatory.
  std::vector<char> optional;

  Instance() = default;
  Instance(Digraph g_, int p_, int q_, std::optional<int> budget_ = std::nullopt,
           std::vector<char> optional_ = {});

  bool is_optional(ArcId a) const {
    return !optional.empty() && optional[static_cast<std::size_t>(a)] != 0;
  }
  bool has_optional_arcs() const;
  // Same problem on the reversed graph with p and q swapped.
  Instance dual() const;
};

struct Solution {
  std::vector<ArcId> arcs;  // sorted, distinct
  std::string engine;
  double elapsed_ms = 0.0;

  int size() const { return static_cast<int>(arcs.size()); }
};

// Sorts and deduplicates an arc list in place; the canonical solution form.
void normalize_arcs(std::vector<ArcId>& arcs);

// Indicator over arcs of g: which arcs are (p,q)-dominated by k_set.
std::vector<char> dominated_arcs(const Digraph& g, int p, int q, std::span<const ArcId> k_set);
inline std::vector<char> dominated_arcs(const Instance& inst, std::span<const ArcId> k_set) {
  return dominated_arcs(inst.g, inst.p, inst.q, k_set);
}

// The arcs that a single arc dominates, as an indicator vector.
std::vector<char> dominated_by_arc(const Digraph& g, int p, int q, ArcId a);

// Every mandatory arc dominated and the budget (if any) respected.
// Throws InputError on an out-of-range arc index.
bool verify(const Instance& inst, std::span<const ArcId> arcs);
inline bool verify(const Instance& inst, const Solution& sol) { return verify(inst, sol.arcs); }

// Mandatory arcs left undominated by k_set, in index order.
std::vector<ArcId> undominated_arcs(const Instance& inst, std::span<const ArcId> k_set);

}  // namespace deds
