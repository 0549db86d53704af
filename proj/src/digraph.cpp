#include "icsi/digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace icsi {

Digraph::Digraph(int vertex_count) {
  if (vertex_count < 1) throw GraphError("digraph needs at least one vertex");
  out_.resize(static_cast<std::size_t>(vertex_count));
  in_.resize(static_cast<std::size_t>(vertex_count));
}

void Digraph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw GraphError("vertex " + std::to_string(v) + " is not in 1.." +
                     std::to_string(vertex_count()));
  }
}

void Digraph::add_arc(Vertex from, Vertex to) {
  if (!ensure_arc(from, to)) {
    throw GraphError("duplicate arc " + std::to_string(from) + " -> " + std::to_string(to));
  }
}

bool Digraph::ensure_arc(Vertex from, Vertex to) {
  check_vertex(from);
  check_vertex(to);
  if (from == to) throw GraphError("self-loop at vertex " + std::to_string(from));
  auto& out = out_[from - 1];
  auto it = std::lower_bound(out.begin(), out.end(), to);
  if (it != out.end() && *it == to) return false;
  out.insert(it, to);
  auto& in = in_[to - 1];
  in.insert(std::lower_bound(in.begin(), in.end(), from), from);
  ++arc_count_;
  return true;
}

bool Digraph::has_arc(Vertex from, Vertex to) const {
  if (!contains(from) || !contains(to)) return false;
  const auto& out = out_[from - 1];
  return std::binary_search(out.begin(), out.end(), to);
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[v - 1];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[v - 1];
}

std::vector<Vertex> Digraph::vertices() const {
  std::vector<Vertex> vs(out_.size());
  for (std::size_t i = 0; i < vs.size(); ++i) vs[i] = static_cast<Vertex>(i + 1);
  return vs;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count_);
  for (Vertex u = 1; u <= vertex_count(); ++u) {
    for (Vertex v : out_[u - 1]) result.push_back({u, v});
  }
  return result;
}

bool Path::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Arc> Path::arcs() const {
  std::vector<Arc> result;
  for (std::size_t i = 1; i < vertices.size(); ++i) result.push_back({vertices[i - 1], vertices[i]});
  return result;
}

Cycle::Cycle(std::vector<Vertex> seq) {
  if (seq.size() < 2) throw GraphError("a cycle needs at least two vertices");
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw GraphError("cycle repeats a vertex");
  }
  std::rotate(seq.begin(), std::min_element(seq.begin(), seq.end()), seq.end());
  vertices_ = std::move(seq);
}

bool Cycle::contains(Vertex v) const { return position(v) != npos; }

std::size_t Cycle::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  return it == vertices_.end() ? npos : static_cast<std::size_t>(it - vertices_.begin());
}

Vertex Cycle::successor(Vertex v) const {
  std::size_t p = position(v);
  if (p == npos) throw GraphError("vertex " + std::to_string(v) + " is not on the cycle");
  return vertices_[(p + 1) % vertices_.size()];
}

std::vector<Arc> Cycle::arcs() const {
  std::vector<Arc> result;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    result.push_back({vertices_[i], vertices_[(i + 1) % vertices_.size()]});
  }
  return result;
}

bool Cycle::has_arc(const Arc& arc) const {
  std::size_t p = position(arc.from);
  return p != npos && vertices_[(p + 1) % vertices_.size()] == arc.to;
}

std::vector<Cycle> enumerate_cycles(const Digraph& g, const std::optional<VertexSet>& restrict_to) {
  const int n = g.vertex_count();
  std::vector<char> allowed(static_cast<std::size_t>(n) + 1, restrict_to ? 0 : 1);
  allowed[0] = 0;
  if (restrict_to) {
    for (Vertex v : *restrict_to) {
      if (!g.contains(v)) throw GraphError("restriction names unknown vertex " + std::to_string(v));
      allowed[v] = 1;
    }
  }

  std::vector<Cycle> cycles;
  std::vector<Vertex> stack;
  std::vector<char> on_stack(static_cast<std::size_t>(n) + 1, 0);

  // Each elementary cycle is found exactly once, from its smallest vertex.
  for (Vertex start = 1; start <= n; ++start) {
    if (!allowed[start]) continue;
    std::function<void(Vertex)> extend = [&](Vertex u) {
      for (Vertex w : g.out_neighbors(u)) {
        if (w == start) {
          if (stack.size() >= 2) cycles.emplace_back(stack);
          continue;
        }
        if (w < start || !allowed[w] || on_stack[w]) continue;
        stack.push_back(w);
        on_stack[w] = 1;
        extend(w);
        on_stack[w] = 0;
        stack.pop_back();
      }
    };
    stack.assign(1, start);
    on_stack[start] = 1;
    extend(start);
    on_stack[start] = 0;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

namespace {

template <typename OnPath>
void walk_paths(const Digraph& g, Vertex src, Vertex dst, const VertexSet& forbidden_interior,
                OnPath&& on_path) {
  if (!g.contains(src) || !g.contains(dst)) throw GraphError("path endpoint is not a vertex");
  std::vector<char> blocked(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : forbidden_interior) {
    if (g.contains(v)) blocked[v] = 1;
  }
  std::vector<Vertex> stack{src};
  std::vector<char> on_stack(blocked.size(), 0);
  on_stack[src] = 1;
  bool stop = false;

  if (src == dst) {
    on_path(stack);
    return;
  }
  std::function<void(Vertex)> extend = [&](Vertex u) {
    for (Vertex w : g.out_neighbors(u)) {
      if (stop) return;
      if (w == dst) {
        stack.push_back(w);
        stop = !on_path(stack);
        stack.pop_back();
        continue;
      }
      if (on_stack[w] || blocked[w]) continue;
      stack.push_back(w);
      on_stack[w] = 1;
      extend(w);
      on_stack[w] = 0;
      stack.pop_back();
    }
  };
  extend(src);
}

}  // namespace

std::vector<Path> paths_between(const Digraph& g, Vertex src, Vertex dst,
                                const VertexSet& forbidden_interior) {
  std::vector<Path> paths;
  walk_paths(g, src, dst, forbidden_interior, [&](const std::vector<Vertex>& p) {
    paths.push_back(Path{p});
    return true;
  });
  std::sort(paths.begin(), paths.end());
  return paths;
}

std::size_t count_paths_between(const Digraph& g, Vertex src, Vertex dst,
                                const VertexSet& forbidden_interior, std::size_t limit) {
  std::size_t count = 0;
  walk_paths(g, src, dst, forbidden_interior, [&](const std::vector<Vertex>&) {
    ++count;
    return count < limit;
  });
  return count;
}

bool is_acyclic_after_removal(const Digraph& g, const VertexSet& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError("removed set names unknown vertex " + std::to_string(v));
    gone[v] = 1;
  }
  // Kahn's algorithm on the induced sub-digraph.
  std::vector<int> indegree(static_cast<std::size_t>(n) + 1, 0);
  int remaining = 0;
  for (Vertex u = 1; u <= n; ++u) {
    if (gone[u]) continue;
    ++remaining;
    for (Vertex w : g.out_neighbors(u)) {
      if (!gone[w]) ++indegree[w];
    }
  }
  std::queue<Vertex> ready;
  for (Vertex u = 1; u <= n; ++u) {
    if (!gone[u] && indegree[u] == 0) ready.push(u);
  }
  while (!ready.empty()) {
    Vertex u = ready.front();
    ready.pop();
    --remaining;
    for (Vertex w : g.out_neighbors(u)) {
      if (!gone[w] && --indegree[w] == 0) ready.push(w);
    }
  }
  return remaining == 0;
}

bool reachable_within(const std::vector<Arc>& arcs, Vertex src, Vertex dst) {
  if (src == dst) return true;
  std::map<Vertex, std::vector<Vertex>> adjacency;
  for (const Arc& a : arcs) adjacency[a.from].push_back(a.to);
  std::set<Vertex> seen{src};
  std::queue<Vertex> frontier;
  frontier.push(src);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    auto it = adjacency.find(u);
    if (it == adjacency.end()) continue;
    for (Vertex w : it->second) {
      if (w == dst) return true;
      if (seen.insert(w).second) frontier.push(w);
    }
  }
  return false;
}

Digraph arc_subgraph(const Digraph& g, const std::vector<Arc>& keep) {
  Digraph sub(g.vertex_count());
  for (const Arc& a : keep) {
    if (!g.has_arc(a.from, a.to)) throw GraphError("arc is not in the host digraph");
    sub.ensure_arc(a.from, a.to);
  }
  return sub;
}

std::string to_string(const Path& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (i) os << " -> ";
    os << p.vertices[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const Cycle& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    if (i) os << ' ';
    os << c.vertices()[i];
  }
  os << ')';
  return os.str();
}

}  // namespace icsi
