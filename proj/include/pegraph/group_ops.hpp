#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pegraph/group.hpp"
#include "pegraph/number_theory.hpp"

namespace pegraph {

// Element order -> number of elements of that order.
struct OrderSpectrum {
  std::map<int, int> counts;

  int count(int order) const {
    auto it = counts.find(order);
    return it == counts.end() ? 0 : it->second;
  }

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
};

struct SylowFactor {
  int prime = 0;
  ElementSet elements;
};

// The unique Sylow subgroups of a nilpotent group, ascending by prime.
struct SylowDecomposition {
  std::vector<SylowFactor> factors;
};

inline int element_order(const FiniteGroup& g, Element x) { return g.element_order(x); }

inline OrderSpectrum order_spectrum(const FiniteGroup& g) {
  OrderSpectrum spectrum;
  for (int d : g.element_orders()) ++spectrum.counts[d];
  return spectrum;
}

inline bool is_cyclic(const FiniteGroup& g) {
  const auto& orders = g.element_orders();
  return std::find(orders.begin(), orders.end(), g.order()) != orders.end();
}

inline bool is_abelian(const FiniteGroup& g) {
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

// Smallest subgroup containing the seed, by worklist saturation under right
// multiplication by the seed elements. Finite, so the generated monoid is a group.
inline ElementSet subgroup_closure(const FiniteGroup& g, std::span<const Element> seed) {
  if (seed.empty()) invalid_parameter("subgroup_closure needs a non-empty seed");
  for (Element s : seed) g.check_index(s);
  std::vector<char> member(g.order(), 0);
  std::vector<Element> worklist{kIdentity};
  member[kIdentity] = 1;
  for (std::size_t i = 0; i < worklist.size(); ++i) {
    const Element x = worklist[i];
    for (Element s : seed) {
      const Element y = g.mul(x, s);
      if (!member[y]) {
        member[y] = 1;
        worklist.push_back(y);
      }
    }
  }
  std::sort(worklist.begin(), worklist.end());
  return worklist;
}

inline ElementSet subgroup_closure(const FiniteGroup& g, std::initializer_list<Element> seed) {
  return subgroup_closure(g, std::span<const Element>(seed.begin(), seed.size()));
}

// <x, y> is cyclic iff some cyclic subgroup contains both.
inline bool is_cyclic_pair(const FiniteGroup& g, Element x, Element y) {
  return g.cyclic_containers(x).intersects(g.cyclic_containers(y));
}

// Closed neighbourhood of x in the enhanced power graph: the union of the
// maximal cyclic subgroups containing x.
inline Bitset cyclic_neighbourhood(const FiniteGroup& g, Element x) {
  Bitset out(g.order());
  for (Element z : g.maximal_cyclic_generators()) {
    if (g.cyclic_subgroup(z).test(x)) out |= g.cyclic_subgroup(z);
  }
  return out;
}

inline ElementSet cyc_set(const FiniteGroup& g) {
  ElementSet out;
  const auto& gens = g.maximal_cyclic_generators();
  // x is in Cyc(G) iff it lies in every maximal cyclic subgroup.
  Bitset common(g.order());
  common.set();
  for (Element z : gens) common &= g.cyclic_subgroup(z);
  for (auto x = common.find_first(); x != Bitset::npos; x = common.find_next(x)) {
    out.push_back(static_cast<Element>(x));
  }
  return out;
}

inline ElementSet p_elements(const FiniteGroup& g, int p) {
  if (!nt::is_prime(p)) invalid_parameter("p_elements needs a prime, got " + std::to_string(p));
  ElementSet out;
  const auto& orders = g.element_orders();
  for (int x = 0; x < g.order(); ++x) {
    if (nt::is_prime_power_of(orders[x], p)) out.push_back(x);
  }
  return out;
}

// A finite group is nilpotent iff, for every prime p dividing |G|, the
// elements of p-power order number exactly the p-part of |G|.
inline bool is_nilpotent(const FiniteGroup& g) {
  for (int p : nt::prime_divisors(g.order())) {
    if (static_cast<int>(p_elements(g, p).size()) != nt::prime_part(g.order(), p)) return false;
  }
  return true;
}

inline bool is_closed(const FiniteGroup& g, const ElementSet& elements) {
  std::vector<char> member(g.order(), 0);
  for (Element x : elements) member[x] = 1;
  for (Element a : elements) {
    for (Element b : elements) {
      if (!member[g.mul(a, b)]) return false;
    }
  }
  return true;
}

inline SylowDecomposition sylow_decomposition(const FiniteGroup& g) {
  SylowDecomposition result;
  for (int p : nt::prime_divisors(g.order())) {
    ElementSet elements = p_elements(g, p);
    if (static_cast<int>(elements.size()) != nt::prime_part(g.order(), p) || !is_closed(g, elements)) {
      throw Error(ErrorKind::not_nilpotent,
                  g.name() + " is not nilpotent: its " + std::to_string(p) + "-elements do not form a subgroup");
    }
    result.factors.push_back({p, std::move(elements)});
  }
  return result;
}

// The subgroup on a closed element set, relabelled in ascending index order
// (so the identity stays at 0).
inline FiniteGroup induced_subgroup(const FiniteGroup& g, const ElementSet& elements, std::string name) {
  if (elements.empty() || elements.front() != kIdentity) invalid_parameter("subgroup must contain the identity");
  if (!is_closed(g, elements)) invalid_parameter("element set is not closed under the group operation");
  std::vector<int> relabel(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) relabel[elements[i]] = static_cast<int>(i);
  const int k = static_cast<int>(elements.size());
  std::vector<std::vector<Element>> table(k, std::vector<Element>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) table[i][j] = relabel[g.mul(elements[i], elements[j])];
  }
  std::string provenance = name;
  return FiniteGroup(std::move(name), std::move(table), std::move(provenance));
}

inline FiniteGroup sylow_subgroup(const FiniteGroup& g, const SylowFactor& factor) {
  return induced_subgroup(g, factor.elements, g.name() + " [Sylow " + std::to_string(factor.prime) + "]");
}

}  // namespace pegraph
