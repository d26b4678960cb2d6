#pragma once

#include <vector>

#include "pegraph/graph.hpp"
#include "pegraph/group.hpp"
#include "pegraph/group_ops.hpp"

namespace pegraph {

// x ~ y iff <x, y> is cyclic. Two elements generate a cyclic subgroup exactly
// when some maximal cyclic subgroup holds both, so each maximal cyclic
// subgroup contributes a clique and the rows are filled by bitset unions.
inline Graph enhanced_power_graph(const FiniteGroup& g) {
  const int n = g.order();
  std::vector<Bitset> rows(n, Bitset(n));
  for (Element z : g.maximal_cyclic_generators()) {
    const Bitset& clique = g.cyclic_subgroup(z);
    for (auto x = clique.find_first(); x != Bitset::npos; x = clique.find_next(x)) rows[x] |= clique;
  }
  for (int x = 0; x < n; ++x) rows[x].reset(x);
  return Graph::from_rows(std::move(rows));
}

// x ~ y iff one lies in the cyclic subgroup generated by the other.
inline Graph power_graph(const FiniteGroup& g) {
  const int n = g.order();
  Graph out(n);
  for (Element y = 0; y < n; ++y) {
    const Bitset& powers = g.cyclic_subgroup(y);
    for (auto x = powers.find_first(); x != Bitset::npos; x = powers.find_next(x)) {
      if (static_cast<Element>(x) != y) out.add_edge(static_cast<int>(x), y);
    }
  }
  return out;
}

// Arc y -> x iff x != y and x is a power of y.
inline DiGraph directed_power_graph(const FiniteGroup& g) {
  const int n = g.order();
  DiGraph out(n);
  for (Element y = 0; y < n; ++y) {
    const Bitset& powers = g.cyclic_subgroup(y);
    for (auto x = powers.find_first(); x != Bitset::npos; x = powers.find_next(x)) {
      if (static_cast<Element>(x) != y) out.add_arc(y, static_cast<int>(x));
    }
  }
  return out;
}

// Enhanced power graph restricted to G \ Cyc(G); labels keep the element indices.
inline Graph cyclic_graph(const FiniteGroup& g) {
  const ElementSet core = cyc_set(g);
  std::vector<char> in_core(g.order(), 0);
  for (Element x : core) in_core[x] = 1;
  std::vector<int> rest;
  for (Element x = 0; x < g.order(); ++x) {
    if (!in_core[x]) rest.push_back(x);
  }
  return enhanced_power_graph(g).induced(rest);
}

// Undirected group graph of the given kind.
inline Graph group_graph(const FiniteGroup& g, GraphKind kind) {
  switch (kind) {
    case GraphKind::enhanced: return enhanced_power_graph(g);
    case GraphKind::power: return power_graph(g);
    case GraphKind::cyclic: return cyclic_graph(g);
    case GraphKind::dpower:
    case GraphKind::other: break;
  }
  invalid_parameter("no undirected group graph of kind '" + std::string(to_string(kind)) + "'");
}

}  // namespace pegraph
