#include "icsi/outer_cycles.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "icsi/errors.hpp"

namespace icsi {

CycleFamily::CycleFamily(std::vector<Cycle> cycles) : cycles_(std::move(cycles)) {
  std::sort(cycles_.begin(), cycles_.end());
  cycles_.erase(std::unique(cycles_.begin(), cycles_.end()), cycles_.end());
  const std::size_t n = cycles_.size();

  std::set<Arc> arcs;
  for (const Cycle& c : cycles_) {
    vertex_sets_.push_back(c.vertex_set());
    union_vertices_.insert(c.vertices().begin(), c.vertices().end());
    for (const Arc& a : c.arcs()) arcs.insert(a);
  }
  union_arcs_.assign(arcs.begin(), arcs.end());

  intersections_.assign(n, std::vector<VertexSet>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::set_intersection(vertex_sets_[i].begin(), vertex_sets_[i].end(),
                            vertex_sets_[j].begin(), vertex_sets_[j].end(),
                            std::inserter(intersections_[i][j], intersections_[i][j].end()));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    VertexSet only = vertex_sets_[j];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      for (Vertex v : intersections_[i][j]) only.erase(v);
    }
    exclusive_.push_back(std::move(only));
  }

  central_.assign(n, false);
  for (CycleIndex c : central_cycles(*this)) central_[c] = true;
}

const VertexSet& CycleFamily::intersection(CycleIndex i, CycleIndex j) const {
  return intersections_.at(i).at(j);
}

std::vector<CycleIndex> CycleFamily::cycles_through(Vertex v) const {
  std::vector<CycleIndex> result;
  for (CycleIndex i = 0; i < size(); ++i) {
    if (vertex_sets_[i].count(v)) result.push_back(i);
  }
  return result;
}

CycleFamily build_family(const ICStructure& s) {
  return CycleFamily(enumerate_cycles(s.graph(), s.non_inner()));
}

namespace {

// The shared vertices of `c` as one contiguous run in cycle order, or nullopt
// when they are split into several runs.
std::optional<std::vector<Vertex>> contiguous_run(const Cycle& c, const VertexSet& shared) {
  const auto& seq = c.vertices();
  const std::size_t m = seq.size();
  std::optional<std::size_t> start;
  for (std::size_t i = 0; i < m; ++i) {
    bool here = shared.count(seq[i]) != 0;
    bool before = shared.count(seq[(i + m - 1) % m]) != 0;
    if (here && !before) {
      if (start) return std::nullopt;
      start = i;
    }
  }
  if (!start) return std::nullopt;
  std::vector<Vertex> run;
  for (std::size_t k = 0; k < m && shared.count(seq[(*start + k) % m]); ++k) {
    run.push_back(seq[(*start + k) % m]);
  }
  return run;
}

}  // namespace

bool share_single_path(const Cycle& a, const Cycle& b, std::string* reason) {
  VertexSet va = a.vertex_set();
  VertexSet vb = b.vertex_set();
  VertexSet shared;
  std::set_intersection(va.begin(), va.end(), vb.begin(), vb.end(),
                        std::inserter(shared, shared.end()));
  auto fail = [&](const char* why) {
    if (reason) *reason = why;
    return false;
  };
  if (shared.empty()) return true;
  if (shared == va || shared == vb) return fail("the shared vertices make up a whole cycle");
  auto run_a = contiguous_run(a, shared);
  auto run_b = contiguous_run(b, shared);
  if (!run_a || !run_b) return fail("the shared vertices are not contiguous");
  if (*run_a != *run_b) return fail("the shared path is traversed differently");
  return true;
}

IlcResult check_ilc(const CycleFamily& fam) {
  IlcResult result;
  for (CycleIndex i = 0; i < fam.size(); ++i) {
    for (CycleIndex k = i + 1; k < fam.size(); ++k) {
      std::string reason;
      if (!share_single_path(fam.cycle(i), fam.cycle(k), &reason)) {
        result.holds = false;
        result.violations.push_back({i, k, fam.intersection(i, k), reason});
      }
    }
  }
  return result;
}

std::vector<CycleIndex> central_cycles(const CycleFamily& fam) {
  std::vector<CycleIndex> result;
  const std::size_t n = fam.size();
  for (CycleIndex c = 0; c < n; ++c) {
    bool ok = true;
    for (CycleIndex i = 0; i < n && ok; ++i) {
      if (i != c && !fam.intersects(c, i)) ok = false;
    }
    for (CycleIndex i = 0; i < n && ok; ++i) {
      for (CycleIndex j = i + 1; j < n && ok; ++j) {
        if (i == c || j == c) continue;
        const VertexSet& vij = fam.intersection(i, j);
        if (vij.empty()) continue;
        ok = std::any_of(vij.begin(), vij.end(),
                         [&](Vertex v) { return fam.vertex_set(c).count(v) != 0; });
      }
    }
    if (ok) result.push_back(c);
  }
  return result;
}

VertexSet common_vertex(const CycleFamily& fam, std::span<const CycleIndex> subset) {
  if (subset.empty()) throw PreconditionError("common_vertex needs a non-empty subset");
  VertexSet common = fam.vertex_set(subset.front());
  for (CycleIndex i : subset.subspan(1)) {
    VertexSet next;
    const VertexSet& vs = fam.vertex_set(i);
    std::set_intersection(common.begin(), common.end(), vs.begin(), vs.end(),
                          std::inserter(next, next.end()));
    common = std::move(next);
  }
  return common;
}

VertexSet common_vertex(const CycleFamily& fam) {
  if (fam.empty()) return {};
  std::vector<CycleIndex> all(fam.size());
  for (CycleIndex i = 0; i < all.size(); ++i) all[i] = i;
  return common_vertex(fam, all);
}

namespace {

VertexSet reach_set(const std::map<Vertex, std::vector<Vertex>>& adjacency, Vertex from) {
  VertexSet seen{from};
  std::queue<Vertex> frontier;
  frontier.push(from);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    auto it = adjacency.find(u);
    if (it == adjacency.end()) continue;
    for (Vertex w : it->second) {
      if (seen.insert(w).second) frontier.push(w);
    }
  }
  return seen;
}

}  // namespace

P2Result check_p2(const CycleFamily& fam, CycleIndex central) {
  P2Result result;
  for (CycleIndex k = 0; k < fam.size(); ++k) {
    for (CycleIndex l = 0; l < fam.size(); ++l) {
      std::map<Vertex, std::vector<Vertex>> adjacency;
      for (CycleIndex idx : {k, l, central}) {
        for (const Arc& a : fam.cycle(idx).arcs()) adjacency[a.from].push_back(a.to);
      }
      for (Vertex i : fam.vertex_set(k)) {
        VertexSet reach = reach_set(adjacency, i);
        for (Vertex j : fam.vertex_set(l)) {
          if (!reach.count(j)) {
            result.holds = false;
            result.witness = P2Witness{k, l, i, j};
            return result;
          }
        }
      }
    }
  }
  return result;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return "holds";
    case Verdict::violated:
      return "violated";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "unknown";
}

bool LemmaReport::any_violated() const {
  for (Verdict v : {lemma21, lemma22, lemma23, lemma24, lemma25, p1, p2}) {
    if (v == Verdict::violated) return true;
  }
  return false;
}

namespace {

Verdict combine(const std::vector<Verdict>& verdicts) {
  Verdict out = Verdict::not_applicable;
  for (Verdict v : verdicts) {
    if (v == Verdict::violated) return Verdict::violated;
    if (v == Verdict::holds) out = Verdict::holds;
  }
  return out;
}

Lemma21Entry unique_parts(const CycleFamily& fam, CycleIndex c, CycleIndex k) {
  Lemma21Entry entry;
  entry.cycle = k;
  entry.unique_vertices = fam.exclusive(k);
  VertexSet rest = fam.vertex_set(k);
  for (Vertex v : fam.intersection(c, k)) rest.erase(v);
  entry.applicable = !rest.empty();

  const Cycle& cyc = fam.cycle(k);
  const auto& seq = cyc.vertices();
  const std::size_t m = seq.size();
  std::vector<char> unique(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    Arc a{seq[i], seq[(i + 1) % m]};
    for (CycleIndex other = 0; other < fam.size(); ++other) {
      if (other != k && fam.cycle(other).has_arc(a)) unique[i] = 0;
    }
  }
  bool all_unique = std::all_of(unique.begin(), unique.end(), [](char u) { return u != 0; });
  if (all_unique) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (!entry.unique_vertices.count(seq[i])) {
        start = i;
        break;
      }
    }
    Path run;
    for (std::size_t step = 0; step <= m; ++step) run.vertices.push_back(seq[(start + step) % m]);
    entry.unique_runs.push_back(std::move(run));
  } else {
    for (std::size_t i = 0; i < m; ++i) {
      if (!unique[i] || unique[(i + m - 1) % m]) continue;
      Path run{{seq[i]}};
      for (std::size_t j = i; unique[j % m]; ++j) run.vertices.push_back(seq[(j + 1) % m]);
      entry.unique_runs.push_back(std::move(run));
    }
  }

  if (!entry.applicable) {
    entry.verdict = Verdict::not_applicable;
  } else {
    bool found = !entry.unique_runs.empty() || !entry.unique_vertices.empty();
    entry.verdict = found ? Verdict::holds : Verdict::violated;
  }
  return entry;
}

// Shortest path (BFS over sorted adjacency) from `src` to the smallest-id
// target, passing only through vertices accepted by `pass`.
template <typename IsTarget, typename CanPass>
std::optional<Path> bfs_path(const Digraph& g, Vertex src, bool reverse, IsTarget is_target,
                             CanPass pass) {
  std::map<Vertex, Vertex> parent{{src, src}};
  std::queue<Vertex> frontier;
  frontier.push(src);
  VertexSet hits;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : reverse ? g.in_neighbors(u) : g.out_neighbors(u)) {
      if (parent.count(w)) continue;
      if (is_target(w)) {
        parent.emplace(w, u);
        hits.insert(w);
      } else if (pass(w)) {
        parent.emplace(w, u);
        frontier.push(w);
      }
    }
  }
  if (hits.empty()) return std::nullopt;
  Path p;
  for (Vertex v = *hits.begin(); v != src; v = parent.at(v)) p.vertices.push_back(v);
  p.vertices.push_back(src);
  if (!reverse) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

Lemma22Entry entry_exit_paths(const ICStructure& s, const CycleFamily& fam, CycleIndex k) {
  Lemma22Entry entry;
  entry.cycle = k;
  entry.exclusive = fam.exclusive(k);
  const VertexSet& voc = fam.union_vertices();
  auto pass = [&](Vertex w) { return !s.is_inner(w) && !voc.count(w); };
  auto is_exclusive = [&](Vertex w) { return entry.exclusive.count(w) != 0; };

  for (Vertex i : s.inner()) {
    entry.in_path = bfs_path(s.graph(), i, false, is_exclusive, pass);
    if (entry.in_path) break;
  }
  for (Vertex i : s.inner()) {
    // Searching backwards from each inner vertex keeps the witness choice
    // symmetric with the in-path search above.
    entry.out_path = bfs_path(s.graph(), i, true, is_exclusive, pass);
    if (entry.out_path) break;
  }
  bool ok = !entry.exclusive.empty() && entry.in_path && entry.out_path;
  entry.verdict = ok ? Verdict::holds : Verdict::violated;
  return entry;
}

}  // namespace

LemmaReport verify_lemmas(const ICStructure& s, const CycleFamily& fam,
                          std::optional<CycleIndex> central) {
  if (fam.empty()) throw PreconditionError("the outer-cycle family is empty");
  if (!check_ilc(fam).holds) throw PreconditionError("the outer cycles violate ILC");
  LemmaReport report;
  report.central_cycles = central_cycles(fam);
  if (report.central_cycles.empty()) throw PreconditionError("the outer cycles have no central cycle");
  if (central) {
    if (*central >= fam.size() || !fam.is_central(*central)) {
      throw PreconditionError("the requested cycle is not central");
    }
    report.central = *central;
  } else {
    report.central = report.central_cycles.front();
  }
  const CycleIndex c = report.central;
  const std::size_t n = fam.size();
  report.all_common = common_vertex(fam);

  std::vector<Verdict> v21, v22;
  for (CycleIndex k = 0; k < n; ++k) {
    if (k == c) continue;
    report.lemma21_entries.push_back(unique_parts(fam, c, k));
    v21.push_back(report.lemma21_entries.back().verdict);
    report.lemma22_entries.push_back(entry_exit_paths(s, fam, k));
    v22.push_back(report.lemma22_entries.back().verdict);
  }
  report.lemma21 = combine(v21);
  report.lemma22 = combine(v22);

  for (CycleIndex i = 0; i < n; ++i) {
    Lemma23Entry entry;
    entry.cycle = i;
    entry.is_central = i == c;
    for (CycleIndex j = 0; j < n; ++j) {
      if (fam.intersects(i, j)) entry.group.push_back(j);
    }
    entry.common = common_vertex(fam, entry.group);
    if (entry.common.empty()) {
      report.lemma23_unscoped = false;
      if (!entry.is_central) report.lemma23_scoped = false;
    }
    report.lemma23_entries.push_back(std::move(entry));
  }
  bool several_central_share = report.central_cycles.size() < 2 || !report.all_common.empty();
  report.lemma23 = report.lemma23_scoped && several_central_share ? Verdict::holds : Verdict::violated;

  if (report.all_common.empty()) {
    report.lemma24 = report.central_cycles.size() == 1 ? Verdict::holds : Verdict::violated;
    report.p1 = Verdict::not_applicable;

    std::vector<Verdict> v25;
    for (CycleIndex j = 0; j < n; ++j) {
      if (j == c) continue;
      Lemma25Entry entry;
      entry.cycle = j;
      for (CycleIndex k = 0; k < n; ++k) {
        if (k == c) continue;
        (fam.intersects(k, j) ? entry.star : entry.outside).push_back(k);
      }
      for (CycleIndex o : entry.outside) {
        for (CycleIndex st : entry.star) {
          if (!entry.counterexample && fam.intersects(o, st)) entry.counterexample = {o, st};
        }
      }
      v25.push_back(entry.counterexample ? Verdict::violated : Verdict::holds);
      report.lemma25_entries.push_back(std::move(entry));
    }
    report.lemma25 = combine(v25);
  } else {
    report.lemma24 = Verdict::not_applicable;
    report.lemma25 = Verdict::not_applicable;
    report.p1 = report.central_cycles.size() == n ? Verdict::holds : Verdict::violated;
  }

  std::vector<Verdict> vp2;
  for (CycleIndex cc : report.central_cycles) {
    P2Result r = check_p2(fam, cc);
    vp2.push_back(r.holds ? Verdict::holds : Verdict::violated);
    report.p2_results.emplace_back(cc, std::move(r));
  }
  report.p2 = combine(vp2);
  return report;
}

}  // namespace icsi
