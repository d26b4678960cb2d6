#pragma once

#include <algorithm>
#include <optional>
#include <string_view>
#include <vector>

#include "pegraph/graph.hpp"

namespace pegraph {

enum class Shape { complete, star, other };

constexpr std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::complete: return "complete";
    case Shape::star: return "star";
    case Shape::other: return "other";
  }
  return "other";
}

// Size of the dominating core and the sizes (ascending) of the complete
// components left once the core is removed.
struct BlockSignature {
  int dom_count = 0;
  std::vector<int> block_sizes;

  friend bool operator==(const BlockSignature&, const BlockSignature&) = default;
};

// Disjoint union of a and b (b's vertices shifted by |a|) plus every cross edge.
inline Graph join(const Graph& a, const Graph& b) {
  const int na = a.vertex_count(), nb = b.vertex_count();
  Graph out(na + nb);
  for (int u = 0; u < na; ++u) {
    for (int v : a.sorted_neighbours(u)) {
      if (u < v) out.add_edge(u, v);
    }
    for (int w = 0; w < nb; ++w) out.add_edge(u, na + w);
  }
  for (int u = 0; u < nb; ++u) {
    for (int v : b.sorted_neighbours(u)) {
      if (u < v) out.add_edge(na + u, na + v);
    }
  }
  return out;
}

inline std::vector<int> dominating_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  }
  return out;
}

// K1 and K2 (and the empty graph) count as complete.
inline Shape classify_shape(const Graph& g) {
  const long long n = g.vertex_count();
  const long long edges = g.edge_count();
  if (edges == n * (n - 1) / 2) return Shape::complete;
  if (n >= 3 && edges == n - 1 && dominating_vertices(g).size() == 1) return Shape::star;
  return Shape::other;
}

// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<int>> connected_components(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  std::vector<char> seen(removed);
  std::vector<std::vector<int>> components;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Bitset& row = g.neighbours(comp[i]);
      for (auto v = row.find_first(); v != Bitset::npos; v = row.find_next(v)) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(static_cast<int>(v));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace detail {

// Dominating core and the components left after deleting it; nullopt when a
// component is not complete.
struct BlockDecomposition {
  std::vector<int> core;
  std::vector<std::vector<int>> blocks;
};

inline std::optional<BlockDecomposition> block_decomposition(const Graph& g) {
  BlockDecomposition out;
  out.core = dominating_vertices(g);
  std::vector<char> removed(g.vertex_count(), 0);
  for (int v : out.core) removed[v] = 1;
  out.blocks = connected_components(g, removed);
  for (const auto& block : out.blocks) {
    const int k = static_cast<int>(block.size());
    for (int v : block) {
      // Inside a complete block every member sees the core plus the other k-1 members.
      if (g.degree(v) != static_cast<int>(out.core.size()) + k - 1) return std::nullopt;
    }
  }
  return out;
}

}  // namespace detail

inline std::optional<BlockSignature> block_signature(const Graph& g) {
  auto decomposition = detail::block_decomposition(g);
  if (!decomposition) return std::nullopt;
  BlockSignature sig;
  sig.dom_count = static_cast<int>(decomposition->core.size());
  for (const auto& block : decomposition->blocks) sig.block_sizes.push_back(static_cast<int>(block.size()));
  std::sort(sig.block_sizes.begin(), sig.block_sizes.end());
  return sig;
}

}  // namespace pegraph
