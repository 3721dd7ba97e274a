#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deds/domination.hpp"
#include "deds/graph.hpp"

namespace deds {

enum class KernelVerdict { reduced, rejected_no, trivially_yes };

std::string to_string(KernelVerdict v);

struct KernelCertificate {
  int vertices_in = 0, arcs_in = 0;
  int vertices_out = 0, arcs_out = 0;
  int matching_size = 0;
  long long vertex_bound = 0;
  long long arc_bound = 0;
  bool has_digons = false;   // (1,1) arc bound counts one arc per vertex pair
  bool within_bounds = true;
  std::string reason;        // why an instance was rejected, if it was
};

struct KernelResult {
  int p = 0, q = 1;
  Digraph reduced;
  int k_out = 0;
  KernelVerdict verdict = KernelVerdict::reduced;
  KernelCertificate certificate;
  // reduced vertex -> original vertex; -1 for the merged sink vertex.
  std::vector<Vertex> vertex_origin;
  // reduced arc -> original arc; -1 for arcs into the merged sink vertex.
  std::vector<ArcId> arc_origin;
  // (0,1) only: arcs removed by the source-to-sink rule, always in a solution.
  std::vector<ArcId> removed_arcs;
  // (0,1) only: original sinks replaced by the merged vertex.
  std::vector<Vertex> merged_sinks;
  // (0,1) only: reduced arc (v,u) -> original in-arc of v used when lifting.
  std::vector<ArcId> lift_arc;
};

KernelResult kernelize_11(const Digraph& g, int k);
KernelResult kernelize_01(const Digraph& g, int k);

// Maps a solution of the reduced graph back to the original graph.
std::vector<ArcId> lift_solution(const KernelResult& kr, const std::vector<ArcId>& reduced_solution);

}  // namespace deds
