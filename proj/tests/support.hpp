#pragma once

// Helpers shared by the unit tests: small graph builders and brute-force
// reference computations that do not reuse library code paths.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "icsi/digraph.hpp"
#include "icsi/ic_check.hpp"

namespace testing {

using icsi::Digraph;
using icsi::ICStructure;
using icsi::Vertex;
using icsi::VertexSet;

inline Digraph make_graph(int n, const std::vector<std::pair<int, int>>& arcs) {
  Digraph g(n);
  for (auto [u, v] : arcs) g.add_arc(u, v);
  return g;
}

inline Digraph random_digraph(int n, int percent, std::mt19937_64& rng) {
  Digraph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      if (u != v && static_cast<int>(rng() % 100) < percent) g.add_arc(u, v);
    }
  }
  return g;
}

// Bitmask DP over vertex sets: paths[mask][v] counts simple paths that start
// at the lowest vertex of mask, visit exactly mask and end at v. Closing arcs
// back to the start give one count per elementary cycle.
inline std::map<VertexSet, std::size_t> naive_cycle_counts(const Digraph& g) {
  const int n = g.vertex_count();
  const std::uint32_t full = 1u << n;
  std::vector<std::vector<std::size_t>> paths(full, std::vector<std::size_t>(static_cast<std::size_t>(n), 0));
  for (int v = 0; v < n; ++v) paths[1u << v][static_cast<std::size_t>(v)] = 1;
  std::map<VertexSet, std::size_t> counts;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int low = __builtin_ctz(mask);
    std::size_t closing = 0;
    for (int v = 0; v < n; ++v) {
      std::size_t here = paths[mask][static_cast<std::size_t>(v)];
      if (!here) continue;
      if (v != low && g.has_arc(v + 1, low + 1)) closing += here;
      for (int w = low + 1; w < n; ++w) {
        if (!(mask & (1u << w)) && g.has_arc(v + 1, w + 1)) paths[mask | (1u << w)][static_cast<std::size_t>(w)] += here;
      }
    }
    if (closing) {
      VertexSet s;
      for (int v = 0; v < n; ++v) {
        if (mask & (1u << v)) s.insert(v + 1);
      }
      counts[s] = closing;
    }
  }
  return counts;
}

// Same DP idea for src -> dst paths whose interior avoids `forbidden`.
inline std::size_t naive_path_count(const Digraph& g, Vertex src, Vertex dst, const VertexSet& forbidden) {
  const int n = g.vertex_count();
  if (src == dst) return 1;
  const std::uint32_t full = 1u << n;
  std::vector<std::vector<std::size_t>> paths(full, std::vector<std::size_t>(static_cast<std::size_t>(n), 0));
  paths[1u << (src - 1)][static_cast<std::size_t>(src - 1)] = 1;
  std::size_t total = 0;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (int v = 0; v < n; ++v) {
      std::size_t here = paths[mask][static_cast<std::size_t>(v)];
      if (!here) continue;
      if (v + 1 == dst) {
        total += here;
        continue;
      }
      for (int w = 0; w < n; ++w) {
        if (mask & (1u << w) || !g.has_arc(v + 1, w + 1)) continue;
        if (w + 1 != dst && forbidden.count(w + 1)) continue;
        paths[mask | (1u << w)][static_cast<std::size_t>(w)] += here;
      }
    }
  }
  return total;
}

// perm[v] is the new label of v (index 0 unused).
inline ICStructure relabel(const ICStructure& s, const std::vector<Vertex>& perm) {
  Digraph g(s.vertex_count());
  for (const auto& a : s.graph().arcs()) g.add_arc(perm[static_cast<std::size_t>(a.from)], perm[static_cast<std::size_t>(a.to)]);
  VertexSet inner;
  for (Vertex v : s.inner()) inner.insert(perm[static_cast<std::size_t>(v)]);
  return ICStructure(std::move(g), std::move(inner));
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n) + 1);
  for (int v = 0; v <= n; ++v) perm[static_cast<std::size_t>(v)] = v;
  for (int i = n; i > 1; --i) {
    int j = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(i));
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  }
  return perm;
}

// Complete digraph on K inner vertices: the smallest plain IC structure.
inline ICStructure complete_inner(int k) {
  Digraph g(k);
  VertexSet inner;
  for (int u = 1; u <= k; ++u) {
    inner.insert(u);
    for (int v = 1; v <= k; ++v) {
      if (u != v) g.add_arc(u, v);
    }
  }
  return ICStructure(std::move(g), std::move(inner));
}

}  // namespace testing
