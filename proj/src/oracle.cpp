#include "icsi/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "icsi/errors.hpp"

namespace icsi {

namespace {

void check_cycle_bound(const CycleFamily& fam, const OracleLimits& limits) {
  if (fam.size() > limits.max_cycles) {
    throw OracleRefusal("family has " + std::to_string(fam.size()) + " cycles, oracle bound is " +
                        std::to_string(limits.max_cycles));
  }
}

}  // namespace

DisjointOracle oracle_max_disjoint(const CycleFamily& fam, const OracleLimits& limits) {
  check_cycle_bound(fam, limits);
  const std::size_t n = fam.size();
  Vertex max_id = fam.union_vertices().empty() ? 0 : *fam.union_vertices().rbegin();
  std::vector<char> used(static_cast<std::size_t>(max_id) + 1, 0);
  std::vector<CycleIndex> chosen, best;

  // Include-first DFS meets equal-size families in lexicographic order, so the
  // first family of the final size is the smallest witness.
  std::function<void(CycleIndex)> search = [&](CycleIndex idx) {
    if (chosen.size() > best.size()) best = chosen;
    if (idx == n || chosen.size() + (n - idx) <= best.size()) return;
    const auto& vs = fam.cycle(idx).vertices();
    bool free = std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return used[v] != 0; });
    if (free) {
      for (Vertex v : vs) used[v] = 1;
      chosen.push_back(idx);
      search(idx + 1);
      chosen.pop_back();
      for (Vertex v : vs) used[v] = 0;
    }
    search(idx + 1);
  };
  search(0);
  return {best.size(), best};
}

HittingOracle oracle_min_hitting(const CycleFamily& fam, const OracleLimits& limits) {
  check_cycle_bound(fam, limits);
  if (fam.empty()) return {};
  const std::vector<Vertex> candidates(fam.union_vertices().begin(), fam.union_vertices().end());
  const std::size_t n = fam.size();
  std::vector<int> hits(n, 0);
  std::vector<Vertex> chosen;

  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t pos, std::size_t budget) {
    auto first_unhit = std::find(hits.begin(), hits.end(), 0);
    if (first_unhit == hits.end()) return true;
    if (chosen.size() == budget) return false;
    const VertexSet& must_hit = fam.vertex_set(static_cast<CycleIndex>(first_unhit - hits.begin()));
    for (std::size_t i = pos; i < candidates.size(); ++i) {
      Vertex v = candidates[i];
      // The first unhit cycle can only be hit by a later candidate.
      if (v > *must_hit.rbegin()) break;
      std::vector<CycleIndex> through = fam.cycles_through(v);
      for (CycleIndex k : through) ++hits[k];
      chosen.push_back(v);
      if (search(i + 1, budget)) return true;
      chosen.pop_back();
      for (CycleIndex k : through) --hits[k];
    }
    return false;
  };

  for (std::size_t budget = 1; budget <= candidates.size(); ++budget) {
    if (search(0, budget)) return {chosen.size(), VertexSet(chosen.begin(), chosen.end())};
  }
  return {};  // unreachable: every cycle vertex together hits everything
}

MaisOracle oracle_mais(const Digraph& g, const OracleLimits& limits) {
  const int n = g.vertex_count();
  if (n > limits.max_vertices || n > 63) {
    throw OracleRefusal("digraph has " + std::to_string(n) + " vertices, MAIS bound is " +
                        std::to_string(std::min(limits.max_vertices, 63)));
  }
  std::vector<std::uint64_t> in_mask(static_cast<std::size_t>(n), 0);
  for (const Arc& a : g.arcs()) in_mask[a.to - 1] |= std::uint64_t{1} << (a.from - 1);

  auto acyclic = [&](std::uint64_t keep) {
    bool changed = true;
    while (keep && changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if ((keep & bit) && !(in_mask[v] & keep)) {
          keep &= ~bit;
          changed = true;
        }
      }
    }
    return keep == 0;
  };

  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<int> removed;
  std::function<bool(int, int, std::uint64_t)> search = [&](int next, int budget,
                                                            std::uint64_t keep) {
    if (budget == 0) return acyclic(keep);
    for (int v = next; v <= n - budget; ++v) {
      removed.push_back(v);
      if (search(v + 1, budget - 1, keep & ~(std::uint64_t{1} << v))) return true;
      removed.pop_back();
    }
    return false;
  };

  for (int budget = 0; budget <= n; ++budget) {
    removed.clear();
    if (search(0, budget, all)) {
      MaisOracle result;
      result.order = n - budget;
      for (int v = 0; v < n; ++v) {
        if (std::find(removed.begin(), removed.end(), v) == removed.end()) result.acyclic_set.insert(v + 1);
      }
      return result;
    }
  }
  return {};
}

}  // namespace icsi
