#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pegraph/constructors.hpp"
#include "pegraph/expr.hpp"
#include "pegraph/group.hpp"
#include "pegraph/group_iso.hpp"
#include "pegraph/group_ops.hpp"
#include "pegraph/number_theory.hpp"

namespace pegraph {

constexpr int kCorpusOrderLimit = 512;
constexpr int kDefaultCorpusOrder = 72;

// Pairwise non-isomorphic constructible groups up to a bound: every abelian
// group, D_2m, Q_4m, S_k, Heis(p), and direct products of these.
struct Corpus {
  int max_order = 0;
  std::vector<FiniteGroup> groups;
  std::map<int, std::vector<int>> by_order;  // order -> indices into groups
  // Candidates dropped because they were isomorphic to a retained member:
  // (dropped expression, retained expression).
  std::vector<std::pair<std::string, std::string>> duplicates;

  const std::vector<int>& members_of_order(int order) const {
    static const std::vector<int> kNone;
    auto it = by_order.find(order);
    return it == by_order.end() ? kNone : it->second;
  }
};

// Invariant factor lists (d1 >= d2 >= ..., d_{i+1} | d_i) of every abelian group of order n.
inline std::vector<std::vector<int>> abelian_invariants(int n) {
  std::vector<std::vector<int>> result{{}};
  for (auto [p, e] : nt::factorize(n)) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : result) {
      for (const auto& lambda : nt::partitions(e)) {
        std::vector<int> combined = partial;
        combined.resize(std::max(combined.size(), lambda.size()), 1);
        for (std::size_t i = 0; i < lambda.size(); ++i) {
          int pk = 1;
          for (int k = 0; k < lambda[i]; ++k) pk *= p;
          combined[i] *= pk;
        }
        next.push_back(std::move(combined));
      }
    }
    result = std::move(next);
  }
  if (n == 1) return {{1}};
  return result;
}

inline std::string abelian_expression(const std::vector<int>& invariants) {
  std::string out;
  for (int d : invariants) out += (out.empty() ? "" : " x ") + std::string("Z") + std::to_string(d);
  return out;
}

namespace detail {

// Non-abelian atoms with order <= bound, as expressions, ascending by order.
inline std::vector<std::pair<int, std::string>> nonabelian_atoms(int bound) {
  std::vector<std::pair<int, std::string>> atoms;
  for (int order = 6; order <= bound; order += 2) atoms.emplace_back(order, "D" + std::to_string(order));
  for (int order = 8; order <= bound; order += 4) atoms.emplace_back(order, "Q" + std::to_string(order));
  int factorial = 6;
  for (int k = 3; factorial <= bound && k <= 8; ++k, factorial *= k) atoms.emplace_back(factorial, "S" + std::to_string(k));
  for (int p = 3; p * p * p <= bound && p <= 13; ++p) {
    if (nt::is_prime(p)) atoms.emplace_back(p * p * p, "Heis" + std::to_string(p));
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return atoms;
}

}  // namespace detail

// Expressions of all corpus candidates, before deduplication.
inline std::vector<std::string> corpus_candidates(int max_order) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_order; ++n) {
    for (const auto& inv : abelian_invariants(n)) out.push_back(abelian_expression(inv));
  }
  const auto atoms = detail::nonabelian_atoms(max_order);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t from, int order) -> void {
    if (!chosen.empty()) {
      std::string base;
      for (int i : chosen) base += (base.empty() ? "" : " x ") + atoms[i].second;
      for (int k = 1; k * order <= max_order; ++k) {
        for (const auto& inv : abelian_invariants(k)) {
          out.push_back(k == 1 ? base : base + " x " + abelian_expression(inv));
        }
      }
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      if (static_cast<long long>(order) * atoms[i].first > max_order) break;
      chosen.push_back(static_cast<int>(i));
      self(self, i, order * atoms[i].first);
      chosen.pop_back();
    }
  };
  rec(rec, 0, 1);
  return out;
}

inline Corpus build_corpus(int max_order = kDefaultCorpusOrder, std::uint64_t iso_budget = kDefaultIsoBudget) {
  if (max_order < 1 || max_order > kCorpusOrderLimit) {
    invalid_parameter("corpus max order must be in 1.." + std::to_string(kCorpusOrderLimit) + ", got " +
                      std::to_string(max_order));
  }
  Corpus corpus;
  corpus.max_order = max_order;
  // Bucket retained members by (order, spectrum); confirm duplicates by group isomorphism.
  std::map<std::pair<int, std::map<int, int>>, std::vector<int>> buckets;
  auto candidates = corpus_candidates(max_order);
  std::stable_sort(candidates.begin(), candidates.end(), [](const std::string& a, const std::string& b) {
    return expr_order(parse_group_expr(a)) < expr_order(parse_group_expr(b));
  });
  for (const auto& expression : candidates) {
    FiniteGroup g = build_group(expression);
    auto& bucket = buckets[{g.order(), order_spectrum(g).counts}];
    bool duplicate = false;
    for (int idx : bucket) {
      if (groups_isomorphic(g, corpus.groups[idx], iso_budget).isomorphic()) {
        corpus.duplicates.emplace_back(expression, corpus.groups[idx].provenance());
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    const int idx = static_cast<int>(corpus.groups.size());
    bucket.push_back(idx);
    corpus.by_order[g.order()].push_back(idx);
    corpus.groups.push_back(std::move(g));
  }
  return corpus;
}

}  // namespace pegraph
