#pragma once

#include <algorithm>
#include <vector>

#include "pegraph/group.hpp"
#include "pegraph/group_ops.hpp"
#include "pegraph/iso_result.hpp"

namespace pegraph {

// Greedy generating set: repeatedly add the element of largest order outside
// the current closure, lowest index first on ties.
inline std::vector<Element> greedy_generators(const FiniteGroup& g) {
  std::vector<Element> gens;
  std::vector<char> inside(g.order(), 0);
  inside[kIdentity] = 1;
  int covered = 1;
  while (covered < g.order()) {
    Element best = -1;
    for (Element x = 0; x < g.order(); ++x) {
      if (!inside[x] && (best < 0 || g.element_order(x) > g.element_order(best))) best = x;
    }
    gens.push_back(best);
    std::fill(inside.begin(), inside.end(), 0);
    for (Element x : subgroup_closure(g, gens)) inside[x] = 1;
    covered = static_cast<int>(std::count(inside.begin(), inside.end(), 1));
  }
  return gens;
}

inline bool is_group_isomorphism(const FiniteGroup& g, const FiniteGroup& h, const IsoCertificate& phi) {
  if (g.order() != h.order() || static_cast<int>(phi.size()) != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (int v : phi) {
    if (v < 0 || v >= h.order() || hit[v]) return false;
    hit[v] = 1;
  }
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
    }
  }
  return true;
}

namespace detail {

class GroupIsoSearch {
 public:
  GroupIsoSearch(const FiniteGroup& g, const FiniteGroup& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), gens_(greedy_generators(g)), images_(gens_.size(), -1) {}

  IsoResult run() {
    IsoResult result;
    const bool found = extend(0);
    result.nodes = nodes_;
    if (found) {
      result.status = IsoStatus::isomorphic;
      result.mapping = phi_;
    } else {
      result.status = exhausted_ ? IsoStatus::budget_exhausted : IsoStatus::non_isomorphic;
    }
    return result;
  }

 private:
  // Extends phi over the closure of the first k generators; false on a clash.
  bool propagate(std::size_t k) {
    const int n = g_.order();
    phi_.assign(n, -1);
    std::vector<char> used(n, 0);
    std::vector<Element> worklist{kIdentity};
    phi_[kIdentity] = kIdentity;
    used[kIdentity] = 1;
    for (std::size_t i = 0; i < worklist.size(); ++i) {
      const Element x = worklist[i];
      for (std::size_t j = 0; j < k; ++j) {
        const Element y = g_.mul(x, gens_[j]);
        const Element image = h_.mul(phi_[x], images_[j]);
        if (phi_[y] < 0) {
          if (used[image]) return false;
          phi_[y] = image;
          used[image] = 1;
          worklist.push_back(y);
        } else if (phi_[y] != image) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == gens_.size()) return is_group_isomorphism(g_, h_, phi_);
    const int wanted = g_.element_order(gens_[depth]);
    for (Element candidate = 1; candidate < h_.order(); ++candidate) {
      if (h_.element_order(candidate) != wanted) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      images_[depth] = candidate;
      if (propagate(depth + 1) && extend(depth + 1)) return true;
      if (exhausted_) return false;
    }
    images_[depth] = -1;
    return false;
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::uint64_t budget_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  IsoCertificate phi_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

// Searches for a group isomorphism g -> h by backtracking over the images of a
// greedy generating set of g. Differing order spectra refute without search.
inline IsoResult groups_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                   std::uint64_t budget = kDefaultIsoBudget) {
  if (g.order() != h.order() || order_spectrum(g) != order_spectrum(h)) return {};
  if (g.order() == 1) return {IsoStatus::isomorphic, {0}, 0};
  return detail::GroupIsoSearch(g, h, budget).run();
}

}  // namespace pegraph
