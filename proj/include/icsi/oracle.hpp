#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "icsi/digraph.hpp"
#include "icsi/outer_cycles.hpp"

namespace icsi {

// Exhaustive ground truth for desk-scale instances. Every search refuses
// (OracleRefusal) above its bound and returns the lexicographically smallest
// optimal witness.

struct OracleLimits {
  std::size_t max_cycles = 20;
  int max_vertices = 24;
};

struct DisjointOracle {
  std::size_t size = 0;
  std::vector<CycleIndex> subfamily;
};

struct HittingOracle {
  std::size_t size = 0;
  VertexSet vertices;
};

struct MaisOracle {
  int order = 0;
  VertexSet acyclic_set;
};

struct OracleResult {
  DisjointOracle max_disjoint;
  HittingOracle min_hitting;
  std::optional<MaisOracle> mais;
};

/// Largest pairwise vertex-disjoint subfamily.
DisjointOracle oracle_max_disjoint(const CycleFamily& fam, const OracleLimits& limits = {});

/// Smallest vertex set meeting every cycle, by subset size ascending.
HittingOracle oracle_min_hitting(const CycleFamily& fam, const OracleLimits& limits = {});

/// Order of a maximum acyclic induced sub-digraph. The witness is the
/// complement of the lexicographically smallest minimum feedback vertex set.
MaisOracle oracle_mais(const Digraph& g, const OracleLimits& limits = {});

}  // namespace icsi
