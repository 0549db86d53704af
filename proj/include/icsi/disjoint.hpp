#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icsi/outer_cycles.hpp"

namespace icsi {

struct DisjointStep {
  CycleIndex chosen_cycle = 0;
  Vertex chosen_vertex = 0;
  /// Set when no candidate existed in V_{c,j} and the search widened to V_{C_j}.
  bool used_fallback = false;
  std::vector<CycleIndex> removed_cycles;
};

struct DisjointCycleResult {
  std::vector<CycleIndex> chosen_cycles;  // C^S
  VertexSet removed_vertices;             // S
  int t = 0;
  /// True when every cycle shares a vertex and t = 1 without iterating.
  bool shortcut = false;
  std::optional<CycleIndex> central;
  std::vector<DisjointStep> trace;
  std::vector<std::string> warnings;
};

/// Maximum set of vertex-disjoint outer cycles and a matching minimum set of
/// vertices whose removal breaks every outer cycle.
///
/// When all cycles share a vertex the answer is one cycle and one vertex.
/// Otherwise, starting from C^r = all cycles except the central C_c, the
/// lowest-index C_j in C^r is taken together with the lowest vertex of V_{c,j}
/// that lies on every cycle meeting C_j; that vertex goes to S, C_j to C^S, and
/// every cycle through the vertex leaves C^r.
///
/// Throws PreconditionError on an empty family, a family without a central
/// cycle, or when no qualifying vertex exists for some C_j.
DisjointCycleResult max_disjoint(const CycleFamily& fam);

}  // namespace icsi
