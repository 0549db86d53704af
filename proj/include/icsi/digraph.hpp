#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace icsi {

/// Vertex ids are 1-based, matching the labels used in side-information figures.
using Vertex = int;
using VertexSet = std::set<Vertex>;

struct Arc {
  Vertex from = 0;
  Vertex to = 0;

  auto operator<=>(const Arc&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple directed graph on vertices 1..N: no self-loops, no parallel arcs.
/// Adjacency lists are kept sorted so every traversal is deterministic.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertex_count);

  int vertex_count() const { return static_cast<int>(out_.size()); }
  std::size_t arc_count() const { return arc_count_; }

  bool contains(Vertex v) const { return v >= 1 && v <= vertex_count(); }

  /// Throws GraphError on self-loops, duplicates, or undeclared endpoints.
  void add_arc(Vertex from, Vertex to);
  /// Adds the arc unless it is already present. Returns true if inserted.
  bool ensure_arc(Vertex from, Vertex to);

  bool has_arc(Vertex from, Vertex to) const;
  const std::vector<Vertex>& out_neighbors(Vertex v) const;
  const std::vector<Vertex>& in_neighbors(Vertex v) const;

  std::vector<Vertex> vertices() const;
  std::vector<Arc> arcs() const;

  bool operator==(const Digraph&) const = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t arc_count_ = 0;
};

/// A simple path. A single vertex is a path of length zero.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool contains(Vertex v) const;
  std::vector<Arc> arcs() const;

  auto operator<=>(const Path&) const = default;
};

/// Elementary directed cycle, stored rotated so the smallest id comes first.
class Cycle {
 public:
  Cycle() = default;
  /// Accepts any rotation; throws GraphError on repeats or fewer than 2 vertices.
  explicit Cycle(std::vector<Vertex> cyclic_sequence);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  VertexSet vertex_set() const { return {vertices_.begin(), vertices_.end()}; }
  bool contains(Vertex v) const;
  /// Position of v in the canonical sequence, or npos.
  std::size_t position(Vertex v) const;
  Vertex successor(Vertex v) const;
  std::vector<Arc> arcs() const;
  bool has_arc(const Arc& arc) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  auto operator<=>(const Cycle&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Every elementary cycle whose vertices lie in `restrict_to` (all of V when
/// absent), canonical and sorted lexicographically.
std::vector<Cycle> enumerate_cycles(const Digraph& g,
                                    const std::optional<VertexSet>& restrict_to = std::nullopt);

/// All simple src -> dst paths whose interior avoids `forbidden_interior`,
/// sorted lexicographically by vertex sequence.
std::vector<Path> paths_between(const Digraph& g, Vertex src, Vertex dst,
                                const VertexSet& forbidden_interior);

/// Counts the same paths as paths_between, stopping once `limit` is reached.
std::size_t count_paths_between(const Digraph& g, Vertex src, Vertex dst,
                                const VertexSet& forbidden_interior, std::size_t limit);

/// True iff the sub-digraph induced on V \ removed has no cycle.
bool is_acyclic_after_removal(const Digraph& g, const VertexSet& removed);

/// Whether dst is reachable from src using only the given arcs.
bool reachable_within(const std::vector<Arc>& arcs, Vertex src, Vertex dst);

/// Same vertex set, arcs restricted to `keep`.
Digraph arc_subgraph(const Digraph& g, const std::vector<Arc>& keep);

std::string to_string(const Path& p);
std::string to_string(const Cycle& c);

}  // namespace icsi
