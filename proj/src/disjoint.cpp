#include "icsi/disjoint.hpp"

#include <algorithm>
#include <set>

#include "icsi/errors.hpp"

namespace icsi {

namespace {

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

DisjointCycleResult max_disjoint(const CycleFamily& fam) {
  if (fam.empty()) throw PreconditionError("max_disjoint needs at least one outer cycle");
  DisjointCycleResult result;

  VertexSet shared_by_all = common_vertex(fam);
  if (!shared_by_all.empty()) {
    result.shortcut = true;
    result.t = 1;
    result.chosen_cycles = {0};
    result.removed_vertices = {*shared_by_all.begin()};
    DisjointStep step;
    step.chosen_cycle = 0;
    step.chosen_vertex = *shared_by_all.begin();
    for (CycleIndex i = 0; i < fam.size(); ++i) step.removed_cycles.push_back(i);
    result.trace.push_back(std::move(step));
    return result;
  }

  std::vector<CycleIndex> centrals = central_cycles(fam);
  if (centrals.empty()) throw PreconditionError("the outer cycles have no central cycle");
  const CycleIndex c = centrals.front();
  result.central = c;

  std::set<CycleIndex> remaining;
  for (CycleIndex i = 0; i < fam.size(); ++i) {
    if (i != c) remaining.insert(i);
  }

  while (!remaining.empty()) {
    const CycleIndex j = *remaining.begin();
    DisjointStep step;
    step.chosen_cycle = j;

    // Vertices of C_j lying on every cycle that meets C_j; C_c is among those
    // cycles, so the candidates already sit inside V_{c,j}.
    VertexSet candidates = fam.intersection(c, j);
    for (CycleIndex k = 0; k < fam.size(); ++k) {
      if (k != j && fam.intersects(k, j)) candidates = intersect(candidates, fam.vertex_set(k));
    }
    if (candidates.empty()) {
      candidates = fam.vertex_set(j);
      for (CycleIndex k = 0; k < fam.size(); ++k) {
        if (k != j && k != c && fam.intersects(k, j)) {
          candidates = intersect(candidates, fam.vertex_set(k));
        }
      }
      if (candidates.empty()) {
        throw PreconditionError("no vertex of C_" + std::to_string(j + 1) +
                                " is shared by every cycle meeting it; the family is not interlocked");
      }
      step.used_fallback = true;
      result.warnings.push_back("C_" + std::to_string(j + 1) +
                                ": no common vertex inside V_{c,j}; chose one from V_{C_j}");
    }
    step.chosen_vertex = *candidates.begin();

    result.removed_vertices.insert(step.chosen_vertex);
    result.chosen_cycles.push_back(j);
    for (CycleIndex k : fam.cycles_through(step.chosen_vertex)) {
      if (remaining.erase(k)) step.removed_cycles.push_back(k);
    }
    result.trace.push_back(std::move(step));
  }
  result.t = static_cast<int>(result.chosen_cycles.size());
  return result;
}

}  // namespace icsi
