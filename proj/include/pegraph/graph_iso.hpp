#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pegraph/graph.hpp"
#include "pegraph/graph_probes.hpp"
#include "pegraph/iso_result.hpp"
#include "pegraph/refinement.hpp"

namespace pegraph {

struct GraphIsoOptions {
  std::uint64_t budget = kDefaultIsoBudget;
  bool block_fast_path = true;
};

// Raised by canonical_certificate when the node budget runs out.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t nodes)
      : std::runtime_error("isomorphism search exceeded its budget of " + std::to_string(nodes) + " nodes") {}
};

inline bool is_graph_isomorphism(const Graph& a, const Graph& b, const IsoCertificate& phi) {
  const int n = a.vertex_count();
  if (b.vertex_count() != n || static_cast<int>(phi.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : phi) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (a.has_edge(u, v) != b.has_edge(phi[u], phi[v])) return false;
    }
  }
  return true;
}

inline std::vector<long long> triangle_counts(const Graph& g) {
  std::vector<long long> out(g.vertex_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const Bitset& nv = g.neighbours(v);
    long long twice = 0;
    for (auto u = nv.find_first(); u != Bitset::npos; u = nv.find_next(u)) {
      twice += static_cast<long long>((nv & g.neighbours(static_cast<int>(u))).count());
    }
    out[v] = twice / 2;
  }
  return out;
}

// Cheap refutation: false only when a and b certainly differ.
inline bool invariant_screen(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<int> d(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  auto ta = triangle_counts(a), tb = triangle_counts(b);
  std::sort(ta.begin(), ta.end());
  std::sort(tb.begin(), tb.end());
  return ta == tb;
}

// Twin classes: u, v are closed twins when N[u] = N[v] and open twins when
// N(u) = N(v). Swapping two twins is an automorphism. Returns a class id per
// vertex (the smallest member of its class).
inline std::vector<int> twin_classes(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> cls(n);
  std::iota(cls.begin(), cls.end(), 0);
  std::map<Bitset, int> closed, open;
  for (int v = 0; v < n; ++v) {
    Bitset nb = g.neighbours(v);
    auto [it_open, fresh_open] = open.emplace(nb, v);
    nb.set(v);
    auto [it_closed, fresh_closed] = closed.emplace(nb, v);
    if (!fresh_closed) {
      cls[v] = cls[it_closed->second];
    } else if (!fresh_open) {
      cls[v] = cls[it_open->second];
    }
  }
  return cls;
}

namespace detail {

inline IsoResult checked(const Graph& a, const Graph& b, IsoResult r) {
  if (r.isomorphic() && !is_graph_isomorphism(a, b, r.mapping)) {
    throw std::logic_error("internal error: emitted graph isomorphism certificate is not edge-perfect");
  }
  return r;
}

// Blocks ordered by (size, smallest vertex); core and blocks matched in order.
inline IsoResult block_fast_path(const BlockDecomposition& da, const BlockDecomposition& db, int n) {
  auto order_blocks = [](std::vector<std::vector<int>> blocks) {
    std::stable_sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return blocks;
  };
  const auto ba = order_blocks(da.blocks), bb = order_blocks(db.blocks);
  if (da.core.size() != db.core.size() || ba.size() != bb.size()) return {};
  IsoResult r;
  r.mapping.assign(n, -1);
  for (std::size_t i = 0; i < da.core.size(); ++i) r.mapping[da.core[i]] = db.core[i];
  for (std::size_t i = 0; i < ba.size(); ++i) {
    if (ba[i].size() != bb[i].size()) return {};
    for (std::size_t j = 0; j < ba[i].size(); ++j) r.mapping[ba[i][j]] = bb[i][j];
  }
  r.status = IsoStatus::isomorphic;
  return r;
}

// Individualization-refinement search. The source graph follows a single
// path (lowest vertex of the first smallest non-singleton cell); the target
// graph tries every vertex of the matching cell, skipping twins of vertices
// already tried there.
class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget), twins_b_(twin_classes(b)) {}

  IsoResult run() {
    IsoResult r;
    RefinementTrace ta, tb;
    RefinementPartition pa = degree_partition(a_, &ta);
    RefinementPartition pb = degree_partition(b_, &tb);
    refine(a_, pa, &ta);
    refine(b_, pb, &tb);
    if (ta == tb && search(pa, pb)) {
      r.status = IsoStatus::isomorphic;
      r.mapping = mapping_;
    } else {
      r.status = exhausted_ ? IsoStatus::budget_exhausted : IsoStatus::non_isomorphic;
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  bool search(const RefinementPartition& pa, const RefinementPartition& pb) {
    const int target = pa.target_cell();
    if (target < 0) {
      mapping_.assign(a_.vertex_count(), -1);
      for (std::size_t c = 0; c < pa.cells.size(); ++c) mapping_[pa.cells[c][0]] = pb.cells[c][0];
      return is_graph_isomorphism(a_, b_, mapping_);
    }
    const int v = pa.cells[target].front();
    RefinementTrace ta;
    RefinementPartition child_a = individualize(pa, target, v);
    refine(a_, child_a, &ta);

    std::vector<int> tried_classes;
    for (int w : pb.cells[target]) {
      if (std::find(tried_classes.begin(), tried_classes.end(), twins_b_[w]) != tried_classes.end()) continue;
      tried_classes.push_back(twins_b_[w]);
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      RefinementTrace tb;
      RefinementPartition child_b = individualize(pb, target, w);
      refine(b_, child_b, &tb);
      if (ta != tb) continue;
      if (search(child_a, child_b)) return true;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::uint64_t budget_;
  std::vector<int> twins_b_;
  IsoCertificate mapping_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

// Decides a ≅ b. With block signatures on both sides the answer is read off
// the signatures; otherwise screening, then refinement with backtracking.
inline IsoResult graphs_isomorphic(const Graph& a, const Graph& b, const GraphIsoOptions& options = {}) {
  if (a.vertex_count() != b.vertex_count()) return {};
  if (a.vertex_count() == 0) return {IsoStatus::isomorphic, {}, 0};
  if (options.block_fast_path) {
    auto da = detail::block_decomposition(a);
    auto db = detail::block_decomposition(b);
    if (da && db) return detail::checked(a, b, detail::block_fast_path(*da, *db, a.vertex_count()));
  }
  if (!invariant_screen(a, b)) return {};
  return detail::checked(a, b, detail::IsoSearch(a, b, options.budget).run());
}

inline IsoResult graphs_isomorphic(const Graph& a, const Graph& b, std::uint64_t budget) {
  return graphs_isomorphic(a, b, GraphIsoOptions{budget, true});
}

namespace detail {

// Canonical labelling by exhaustive individualization-refinement, keeping the
// least leaf adjacency string. Subtrees are skipped when a known automorphism
// fixing the current prefix maps them onto an explored sibling; known
// automorphisms come from twin transpositions and from pairs of equal leaves.
class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.vertex_count()), budget_(budget) {
    const auto twins = twin_classes(g);
    for (int v = 0; v < n_; ++v) {
      if (twins[v] != v) {
        std::vector<int> swap(n_);
        std::iota(swap.begin(), swap.end(), 0);
        std::swap(swap[v], swap[twins[v]]);
        generators_.push_back(std::move(swap));
      }
    }
  }

  std::string run() {
    RefinementPartition p = degree_partition(g_);
    refine(g_, p);
    explore(p, 0);
    return encode(best_->bits);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct Leaf {
    std::vector<int> order;  // position -> vertex
    std::vector<std::uint8_t> bits;
  };

  struct Frame {
    int first_child = -1;
    int current_child = -1;
    std::shared_ptr<const Leaf> first_leaf;
  };

  std::vector<std::uint8_t> leaf_bits(const std::vector<int>& order) const {
    const std::size_t pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
    std::vector<std::uint8_t> bits((pairs + 7) / 8, 0);
    std::size_t k = 0;
    for (int i = 0; i < n_; ++i) {
      const Bitset& row = g_.neighbours(order[i]);
      for (int j = i + 1; j < n_; ++j, ++k) {
        if (row.test(order[j])) bits[k / 8] |= static_cast<std::uint8_t>(0x80u >> (k % 8));
      }
    }
    return bits;
  }

  std::string encode(const std::vector<std::uint8_t>& bits) const {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    const auto n = static_cast<std::uint32_t>(n_);
    std::uint8_t header[4] = {static_cast<std::uint8_t>(n >> 24), static_cast<std::uint8_t>(n >> 16),
                              static_cast<std::uint8_t>(n >> 8), static_cast<std::uint8_t>(n)};
    for (std::uint8_t byte : header) {
      out.push_back(kHex[byte >> 4]);
      out.push_back(kHex[byte & 15]);
    }
    for (std::uint8_t byte : bits) {
      out.push_back(kHex[byte >> 4]);
      out.push_back(kHex[byte & 15]);
    }
    return out;
  }

  bool fixes_prefix(const std::vector<int>& gamma, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      if (gamma[path_[i]] != path_[i]) return false;
    }
    return true;
  }

  // Orbit representatives under the generators fixing the first `depth` path vertices.
  std::vector<int> orbits(std::size_t depth) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& gamma : generators_) {
      if (!fixes_prefix(gamma, depth)) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns -1 normally, or the depth of the frame the search must return to.
  int explore(const RefinementPartition& p, std::size_t depth) {
    if (++nodes_ > budget_) throw BudgetExhausted(budget_);
    const int target = p.target_cell();
    if (target < 0) return at_leaf(p);

    frames_.resize(depth + 1);
    frames_[depth] = Frame{};
    path_.resize(depth + 1);
    std::vector<int> explored;
    std::vector<int> orbit;
    std::size_t orbit_generators = 0;
    for (int w : p.cells[target]) {
      if (!explored.empty()) {
        if (orbit.empty() || orbit_generators != generators_.size()) {
          orbit = orbits(depth);
          orbit_generators = generators_.size();
        }
        const bool covered = std::any_of(explored.begin(), explored.end(), [&](int u) { return orbit[u] == orbit[w]; });
        if (covered) continue;
      }
      explored.push_back(w);
      if (frames_[depth].first_child < 0) frames_[depth].first_child = w;
      frames_[depth].current_child = w;
      path_[depth] = w;
      RefinementPartition child = individualize(p, target, w);
      refine(g_, child);
      const int unwind = explore(child, depth + 1);
      frames_.resize(depth + 1);
      path_.resize(depth + 1);
      if (unwind >= 0 && unwind < static_cast<int>(depth)) return unwind;
    }
    return -1;
  }

  int at_leaf(const RefinementPartition& p) {
    auto leaf = std::make_shared<Leaf>();
    leaf->order = p.ordering();
    leaf->bits = leaf_bits(leaf->order);
    for (auto& frame : frames_) {
      if (!frame.first_leaf) frame.first_leaf = leaf;
    }
    if (!best_ || leaf->bits < best_->bits) best_ = leaf;

    for (std::size_t d = 0; d < frames_.size(); ++d) {
      const Frame& frame = frames_[d];
      if (frame.first_leaf == leaf || frame.current_child == frame.first_child) continue;
      if (frame.first_leaf->bits != leaf->bits) continue;
      std::vector<int> gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[frame.first_leaf->order[i]] = leaf->order[i];
      generators_.push_back(gamma);
      // gamma fixes the prefix and carries the first child's subtree onto the current one.
      if (fixes_prefix(gamma, d) && gamma[frame.first_child] == frame.current_child) return static_cast<int>(d);
    }
    if (best_ != leaf && best_->bits == leaf->bits) {
      std::vector<int> gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[best_->order[i]] = leaf->order[i];
      generators_.push_back(std::move(gamma));
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<int>> generators_;
  std::vector<Frame> frames_;
  std::vector<int> path_;
  std::shared_ptr<const Leaf> best_;
};

}  // namespace detail

// Hex string (4-byte vertex count, then the upper-triangle adjacency bits of
// the least leaf) equal for two graphs iff they are isomorphic.
// Throws BudgetExhausted when the node budget is exceeded.
inline std::string canonical_certificate(const Graph& g, std::uint64_t budget = kDefaultIsoBudget) {
  return detail::CanonicalSearch(g, budget).run();
}

}  // namespace pegraph
