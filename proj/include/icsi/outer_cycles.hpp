#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "icsi/digraph.hpp"
#include "icsi/ic_check.hpp"

namespace icsi {

/// Cycle indices are 0-based internally and printed 1-based (C_1, C_2, ...).
using CycleIndex = std::size_t;

/// The outer cycles C_1..C_n together with their derived vertex sets.
class CycleFamily {
 public:
  CycleFamily() = default;
  /// Sorts `cycles` into canonical lexicographic order.
  explicit CycleFamily(std::vector<Cycle> cycles);

  std::size_t size() const { return cycles_.size(); }
  bool empty() const { return cycles_.empty(); }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const Cycle& cycle(CycleIndex i) const { return cycles_.at(i); }
  const VertexSet& vertex_set(CycleIndex i) const { return vertex_sets_.at(i); }

  /// V_OC, the union of all cycle vertex sets.
  const VertexSet& union_vertices() const { return union_vertices_; }
  /// Arcs of the union digraph (C hat).
  const std::vector<Arc>& union_arcs() const { return union_arcs_; }
  /// V_{i,j}; for i == j this is the cycle's own vertex set.
  const VertexSet& intersection(CycleIndex i, CycleIndex j) const;
  bool intersects(CycleIndex i, CycleIndex j) const { return !intersection(i, j).empty(); }
  /// Vertices of C_j that lie on no other cycle.
  const VertexSet& exclusive(CycleIndex j) const { return exclusive_.at(j); }
  /// Cycles containing v, ascending.
  std::vector<CycleIndex> cycles_through(Vertex v) const;

  /// Central-cycle flags, filled from central_cycles() at construction.
  const std::vector<bool>& central_flags() const { return central_; }
  bool is_central(CycleIndex i) const { return central_.at(i); }

 private:
  std::vector<Cycle> cycles_;
  std::vector<VertexSet> vertex_sets_;
  VertexSet union_vertices_;
  std::vector<Arc> union_arcs_;
  std::vector<std::vector<VertexSet>> intersections_;
  std::vector<VertexSet> exclusive_;
  std::vector<bool> central_;
};

/// Outer cycles of `s` (cycles on V_NI). Empty for a plain IC structure.
CycleFamily build_family(const ICStructure& s);

struct IlcViolation {
  CycleIndex first = 0;
  CycleIndex second = 0;
  VertexSet shared;
  std::string reason;
};

struct IlcResult {
  bool holds = true;
  std::vector<IlcViolation> violations;
};

/// Whether two cycles meet in exactly one common path (a shared vertex counts
/// as a path of length zero). Disjoint cycles pass trivially. When they fail,
/// `reason` receives a short explanation.
bool share_single_path(const Cycle& a, const Cycle& b, std::string* reason = nullptr);

IlcResult check_ilc(const CycleFamily& fam);

/// Indices c such that C_c meets every other cycle and every non-empty V_{i,j}
/// (i, j != c). Empty means no central cycle exists.
std::vector<CycleIndex> central_cycles(const CycleFamily& fam);

/// Intersection of the vertex sets of the listed cycles.
VertexSet common_vertex(const CycleFamily& fam, std::span<const CycleIndex> subset);
VertexSet common_vertex(const CycleFamily& fam);

struct P2Witness {
  CycleIndex from_cycle = 0;
  CycleIndex to_cycle = 0;
  Vertex from = 0;
  Vertex to = 0;
};

struct P2Result {
  bool holds = true;
  std::optional<P2Witness> witness;
};

/// Every vertex of any C_k reaches every vertex of any C_l inside C_k, C_l and C_c.
P2Result check_p2(const CycleFamily& fam, CycleIndex central);

enum class Verdict { holds, violated, not_applicable };

std::string to_string(Verdict v);

/// One entry per cycle other than the central one. A unique run is a stretch
/// of the cycle whose arcs belong to no other cycle; its endpoints are the
/// shared vertices it leaves and re-enters.
struct Lemma21Entry {
  CycleIndex cycle = 0;
  bool applicable = false;
  std::vector<Path> unique_runs;
  VertexSet unique_vertices;
  Verdict verdict = Verdict::not_applicable;
};

struct Lemma22Entry {
  CycleIndex cycle = 0;
  VertexSet exclusive;
  std::optional<Path> in_path;   // inner vertex -> exclusive vertex
  std::optional<Path> out_path;  // exclusive vertex -> inner vertex
  Verdict verdict = Verdict::violated;
};

struct Lemma23Entry {
  CycleIndex cycle = 0;
  std::vector<CycleIndex> group;  // the cycle plus every cycle meeting it
  VertexSet common;
  bool is_central = false;  // entries for the chosen central cycle are informational
};

struct Lemma25Entry {
  CycleIndex cycle = 0;
  std::vector<CycleIndex> star;     // cycles other than C_c meeting C_j (C_j included)
  std::vector<CycleIndex> outside;  // remaining cycles other than C_c
  std::optional<std::pair<CycleIndex, CycleIndex>> counterexample;
};

struct LemmaReport {
  CycleIndex central = 0;
  std::vector<CycleIndex> central_cycles;
  VertexSet all_common;

  Verdict lemma21 = Verdict::not_applicable;
  Verdict lemma22 = Verdict::not_applicable;
  Verdict lemma23 = Verdict::not_applicable;
  Verdict lemma24 = Verdict::not_applicable;
  Verdict lemma25 = Verdict::not_applicable;
  Verdict p1 = Verdict::not_applicable;
  Verdict p2 = Verdict::not_applicable;

  std::vector<Lemma21Entry> lemma21_entries;
  std::vector<Lemma22Entry> lemma22_entries;
  std::vector<Lemma23Entry> lemma23_entries;
  /// Lemma 2.3 restricted to cycles other than the central one.
  bool lemma23_scoped = true;
  /// The same statement applied to every cycle, central included.
  bool lemma23_unscoped = true;
  std::vector<Lemma25Entry> lemma25_entries;
  std::vector<std::pair<CycleIndex, P2Result>> p2_results;

  bool any_violated() const;
};

/// Runs the structural property suite. `central` defaults to the lowest-index
/// central cycle. Throws PreconditionError when ILC fails, no central cycle
/// exists, or `central` is not central.
LemmaReport verify_lemmas(const ICStructure& s, const CycleFamily& fam,
                          std::optional<CycleIndex> central = std::nullopt);

}  // namespace icsi
