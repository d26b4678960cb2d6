#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "pegraph/graph.hpp"

namespace pegraph {

// Ordered partition of the vertex set. Cell order is meaningful; vertices
// inside a cell are kept ascending.
struct RefinementPartition {
  std::vector<std::vector<int>> cells;

  bool discrete() const noexcept {
    return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
  }

  // First smallest non-singleton cell, or -1 when discrete.
  int target_cell() const noexcept {
    int best = -1;
    for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
      const auto size = cells[i].size();
      if (size > 1 && (best < 0 || size < cells[best].size())) best = i;
    }
    return best;
  }

  // Vertex order read off a discrete partition.
  std::vector<int> ordering() const {
    std::vector<int> out;
    for (const auto& c : cells) out.insert(out.end(), c.begin(), c.end());
    return out;
  }
};

// Label-free record of the splits performed during refinement. Isomorphic
// (graph, partition) pairs produce identical traces.
using RefinementTrace = std::vector<std::int64_t>;

inline RefinementPartition degree_partition(const Graph& g, RefinementTrace* trace = nullptr) {
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.vertex_count(); ++v) by_degree[g.degree(v)].push_back(v);
  RefinementPartition p;
  for (auto& [degree, cell] : by_degree) {
    if (trace) {
      trace->push_back(degree);
      trace->push_back(static_cast<std::int64_t>(cell.size()));
    }
    p.cells.push_back(std::move(cell));
  }
  return p;
}

// Refines p to the coarsest equitable partition below it. Each cell in turn
// acts as splitter; every cell is split by the number of neighbours its
// vertices have in the splitter, fragments ordered by ascending count.
// Repeats until a full pass changes nothing.
inline void refine(const Graph& g, RefinementPartition& p, RefinementTrace* trace = nullptr) {
  const int n = g.vertex_count();
  std::vector<int> count(n, 0);
  Bitset splitter(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < p.cells.size(); ++s) {
      splitter.reset();
      for (int v : p.cells[s]) splitter.set(v);
      for (const auto& cell : p.cells) {
        if (cell.size() == 1) continue;
        for (int v : cell) count[v] = static_cast<int>((g.neighbours(v) & splitter).count());
      }
      std::vector<std::vector<int>> next;
      next.reserve(p.cells.size());
      for (std::size_t c = 0; c < p.cells.size(); ++c) {
        auto& cell = p.cells[c];
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::map<int, std::vector<int>> fragments;
        for (int v : cell) fragments[count[v]].push_back(v);
        if (fragments.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        changed = true;
        if (trace) {
          trace->push_back(static_cast<std::int64_t>(s));
          trace->push_back(static_cast<std::int64_t>(c));
        }
        for (auto& [k, fragment] : fragments) {
          if (trace) {
            trace->push_back(k);
            trace->push_back(static_cast<std::int64_t>(fragment.size()));
          }
          next.push_back(std::move(fragment));
        }
      }
      p.cells = std::move(next);
    }
  }
  if (trace) trace->push_back(-static_cast<std::int64_t>(p.cells.size()));
}

// Splits cell `cell` into {v} followed by the remainder.
inline RefinementPartition individualize(const RefinementPartition& p, int cell, int v) {
  RefinementPartition out;
  out.cells.reserve(p.cells.size() + 1);
  for (int c = 0; c < static_cast<int>(p.cells.size()); ++c) {
    if (c != cell) {
      out.cells.push_back(p.cells[c]);
      continue;
    }
    out.cells.push_back({v});
    std::vector<int> rest;
    for (int u : p.cells[c]) {
      if (u != v) rest.push_back(u);
    }
    out.cells.push_back(std::move(rest));
  }
  return out;
}

// True when every vertex of a cell has the same neighbour count into every cell.
inline bool is_equitable(const Graph& g, const RefinementPartition& p) {
  Bitset mask(g.vertex_count());
  for (const auto& splitter : p.cells) {
    mask.reset();
    for (int v : splitter) mask.set(v);
    for (const auto& cell : p.cells) {
      const auto expected = (g.neighbours(cell.front()) & mask).count();
      for (int v : cell) {
        if ((g.neighbours(v) & mask).count() != expected) return false;
      }
    }
  }
  return true;
}

}  // namespace pegraph
