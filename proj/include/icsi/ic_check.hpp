#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "icsi/digraph.hpp"

namespace icsi {

/// A side-information digraph together with its inner vertex set V_I.
class ICStructure {
 public:
  /// Throws StructureError if fewer than two inner vertices are given or an
  /// inner id is not a vertex of `graph`.
  ICStructure(Digraph graph, VertexSet inner);

  const Digraph& graph() const { return graph_; }
  const VertexSet& inner() const { return inner_; }
  const VertexSet& non_inner() const { return non_inner_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int inner_count() const { return static_cast<int>(inner_.size()); }
  bool is_inner(Vertex v) const { return inner_.count(v) != 0; }

  bool operator==(const ICStructure&) const = default;

 private:
  Digraph graph_;
  VertexSet inner_;
  VertexSet non_inner_;
};

struct PathCount {
  Vertex from = 0;
  Vertex to = 0;
  std::size_t count = 0;  // capped at kPathCountCap
};

inline constexpr std::size_t kPathCountCap = 64;

struct RootedTree {
  Vertex root = 0;
  std::vector<Arc> arcs;
  bool is_tree = true;  // every non-root vertex has at most one parent
};

struct ICValidationReport {
  struct ArcCoverage {
    bool holds = true;
    std::vector<Arc> uncovered;
  } condition1;
  struct ICycles {
    bool holds = true;
    std::vector<Cycle> cycles;
  } condition2;
  struct UniquePaths {
    bool holds = true;
    std::vector<PathCount> offending;
  } condition3;
  struct OuterCycles {
    bool holds = true;
    std::vector<Cycle> cycles;
  } condition4;
  std::vector<RootedTree> rooted_trees;

  /// Conditions 1-3: an IC structure, possibly with outer cycles.
  bool with_outer_cycles_ok() const {
    return condition1.holds && condition2.holds && condition3.holds;
  }
  bool is_ic_structure() const { return with_outer_cycles_ok() && condition4.holds; }
};

struct InnerPartition {
  VertexSet v_in;
  VertexSet v_out;
  VertexSet v_star;
};

struct SideConditionWitness {
  Vertex p = 0, q = 0, u = 0, v = 0;
  Vertex shared = 0;
  /// True when the shared vertex is an endpoint of both I-paths.
  bool endpoint_only = false;
};

struct SideConditionVerdict {
  bool holds = true;
  std::optional<SideConditionWitness> witness;
};

struct SideConditions {
  SideConditionVerdict c1;
  SideConditionVerdict c2;
};

/// Simple i -> j paths with no inner vertex in the interior.
std::vector<Path> i_paths(const ICStructure& s, Vertex i, Vertex j);

/// Checks all four IC conditions and collects every violation.
ICValidationReport validate(const ICStructure& s);

/// Classifies inner vertices by whether they reach (v_out) or are reached
/// from (v_in) `outer_vertices` through non-inner vertices only.
InnerPartition inner_partition(const ICStructure& s, const VertexSet& outer_vertices);

/// Throws StructureError if some ordered inner pair lacks a unique I-path.
SideConditions check_c1_c2(const ICStructure& s, const InnerPartition& part);

}  // namespace icsi
