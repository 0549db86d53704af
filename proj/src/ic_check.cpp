#include "icsi/ic_check.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "icsi/errors.hpp"

namespace icsi {

ICStructure::ICStructure(Digraph graph, VertexSet inner)
    : graph_(std::move(graph)), inner_(std::move(inner)) {
  if (inner_.size() < 2) throw StructureError("an IC structure needs at least two inner vertices");
  for (Vertex v : inner_) {
    if (!graph_.contains(v)) {
      throw StructureError("inner vertex " + std::to_string(v) + " is not a vertex of the digraph");
    }
  }
  for (Vertex v : graph_.vertices()) {
    if (!inner_.count(v)) non_inner_.insert(v);
  }
}

namespace {

VertexSet other_inner(const ICStructure& s, Vertex i, Vertex j) {
  VertexSet forbidden = s.inner();
  forbidden.erase(i);
  forbidden.erase(j);
  return forbidden;
}

void require_inner(const ICStructure& s, Vertex v) {
  if (!s.is_inner(v)) throw StructureError(std::to_string(v) + " is not an inner vertex");
}

// Vertices reachable from `from` (or reaching it, when reverse) whose
// connecting path stays inside the non-inner set.
VertexSet non_inner_reach(const ICStructure& s, Vertex from, bool reverse) {
  const Digraph& g = s.graph();
  VertexSet seen;
  std::queue<Vertex> frontier;
  frontier.push(from);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : reverse ? g.in_neighbors(u) : g.out_neighbors(u)) {
      if (s.is_inner(w) || !seen.insert(w).second) continue;
      frontier.push(w);
    }
  }
  return seen;
}

}  // namespace

std::vector<Path> i_paths(const ICStructure& s, Vertex i, Vertex j) {
  require_inner(s, i);
  require_inner(s, j);
  if (i == j) throw StructureError("I-paths join two distinct inner vertices");
  return paths_between(s.graph(), i, j, other_inner(s, i, j));
}

ICValidationReport validate(const ICStructure& s) {
  const Digraph& g = s.graph();
  ICValidationReport report;

  std::set<Arc> covered;
  for (Vertex i : s.inner()) {
    RootedTree tree{i, {}, true};
    std::set<Arc> tree_arcs;
    for (Vertex j : s.inner()) {
      if (i == j) continue;
      std::vector<Path> paths = i_paths(s, i, j);
      if (paths.size() != 1) {
        report.condition3.holds = false;
        report.condition3.offending.push_back({i, j, std::min(paths.size(), kPathCountCap)});
      }
      for (const Path& p : paths) {
        for (const Arc& a : p.arcs()) {
          covered.insert(a);
          tree_arcs.insert(a);
        }
      }
    }
    tree.arcs.assign(tree_arcs.begin(), tree_arcs.end());
    std::map<Vertex, int> parents;
    for (const Arc& a : tree.arcs) ++parents[a.to];
    for (const auto& [v, count] : parents) {
      if (v == i || count > 1) tree.is_tree = false;
    }
    report.rooted_trees.push_back(std::move(tree));
  }

  for (const Arc& a : g.arcs()) {
    if (!covered.count(a)) report.condition1.uncovered.push_back(a);
  }
  report.condition1.holds = report.condition1.uncovered.empty();

  for (Vertex k : s.inner()) {
    VertexSet scope = s.non_inner();
    scope.insert(k);
    for (Cycle& c : enumerate_cycles(g, scope)) {
      if (c.contains(k)) report.condition2.cycles.push_back(std::move(c));
    }
  }
  std::sort(report.condition2.cycles.begin(), report.condition2.cycles.end());
  report.condition2.holds = report.condition2.cycles.empty();

  report.condition4.cycles = enumerate_cycles(g, s.non_inner());
  report.condition4.holds = report.condition4.cycles.empty();
  return report;
}

InnerPartition inner_partition(const ICStructure& s, const VertexSet& outer_vertices) {
  for (Vertex v : outer_vertices) {
    if (!s.non_inner().count(v)) {
      throw StructureError("outer vertex " + std::to_string(v) + " is not a non-inner vertex");
    }
  }
  auto touches = [&](const VertexSet& reach) {
    return std::any_of(reach.begin(), reach.end(),
                       [&](Vertex v) { return outer_vertices.count(v) != 0; });
  };
  InnerPartition part;
  for (Vertex k : s.inner()) {
    bool out = touches(non_inner_reach(s, k, false));
    bool in = touches(non_inner_reach(s, k, true));
    if (out) part.v_out.insert(k);
    if (in) part.v_in.insert(k);
    if (!out && !in) part.v_star.insert(k);
  }
  return part;
}

namespace {

SideConditionVerdict scan_crossings(const std::map<std::pair<Vertex, Vertex>, Path>& unique,
                                    const VertexSet& first, const VertexSet& second) {
  SideConditionVerdict verdict;
  for (Vertex p : first) {
    for (Vertex q : first) {
      if (p == q) continue;
      const Path& pq = unique.at({p, q});
      for (Vertex u : second) {
        for (Vertex v : second) {
          if (u == v || (u == p && v == q)) continue;
          const Path& uv = unique.at({u, v});
          for (Vertex x : pq.vertices) {
            if (!uv.contains(x)) continue;
            bool endpoint_only = (x == p || x == q) && (x == u || x == v);
            verdict.holds = false;
            verdict.witness = SideConditionWitness{p, q, u, v, x, endpoint_only};
            return verdict;
          }
        }
      }
    }
  }
  return verdict;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

}  // namespace

SideConditions check_c1_c2(const ICStructure& s, const InnerPartition& part) {
  std::map<std::pair<Vertex, Vertex>, Path> unique;
  for (Vertex i : s.inner()) {
    for (Vertex j : s.inner()) {
      if (i == j) continue;
      std::vector<Path> paths = i_paths(s, i, j);
      if (paths.size() != 1) {
        throw StructureError("the I-path from " + std::to_string(i) + " to " + std::to_string(j) +
                             " is not unique (" + std::to_string(paths.size()) + " found)");
      }
      unique.emplace(std::make_pair(i, j), std::move(paths.front()));
    }
  }
  SideConditions result;
  result.c1 = scan_crossings(unique, set_union(part.v_in, part.v_star), part.v_out);
  result.c2 = scan_crossings(unique, set_union(part.v_out, part.v_star), part.v_in);
  return result;
}

}  // namespace icsi
