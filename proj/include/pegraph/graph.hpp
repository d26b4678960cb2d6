#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "pegraph/error.hpp"
#include "pegraph/group.hpp"

namespace pegraph {

enum class GraphKind { enhanced, power, dpower, cyclic, other };

constexpr std::string_view to_string(GraphKind k) {
  switch (k) {
    case GraphKind::enhanced: return "enhanced";
    case GraphKind::power: return "power";
    case GraphKind::dpower: return "dpower";
    case GraphKind::cyclic: return "cyclic";
    case GraphKind::other: return "other";
  }
  return "other";
}

inline GraphKind parse_graph_kind(std::string_view s) {
  if (s == "enhanced") return GraphKind::enhanced;
  if (s == "power") return GraphKind::power;
  if (s == "dpower") return GraphKind::dpower;
  if (s == "cyclic") return GraphKind::cyclic;
  invalid_parameter("unknown graph kind '" + std::string(s) + "' (expected enhanced|power|dpower|cyclic)");
}

// Simple undirected graph on vertices 0..n-1 stored as one adjacency bitset
// per vertex. labels[v] records the group element a vertex came from.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n, Bitset(n)), labels_(n) { std::iota(labels_.begin(), labels_.end(), 0); }

  // Adopts adjacency rows; they must be symmetric and loop-free.
  static Graph from_rows(std::vector<Bitset> rows) {
    const int n = static_cast<int>(rows.size());
    for (int u = 0; u < n; ++u) {
      if (static_cast<int>(rows[u].size()) != n) invalid_parameter("adjacency rows must have one bit per vertex");
      if (rows[u].test(u)) invalid_parameter("graphs are simple: no loops");
      for (auto v = rows[u].find_first(); v != Bitset::npos; v = rows[u].find_next(v)) {
        if (!rows[v].test(u)) invalid_parameter("adjacency must be symmetric");
      }
    }
    Graph g;
    g.adj_ = std::move(rows);
    g.labels_.resize(n);
    std::iota(g.labels_.begin(), g.labels_.end(), 0);
    return g;
  }

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) invalid_parameter("graphs are simple: no loops");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  bool has_edge(int u, int v) const noexcept { return adj_[u].test(v); }
  const Bitset& neighbours(int v) const noexcept { return adj_[v]; }
  int degree(int v) const noexcept { return static_cast<int>(adj_[v].count()); }

  long long edge_count() const noexcept {
    long long twice = 0;
    for (const auto& row : adj_) twice += static_cast<long long>(row.count());
    return twice / 2;
  }

  std::vector<int> sorted_neighbours(int v) const {
    std::vector<int> out;
    for (auto u = adj_[v].find_first(); u != Bitset::npos; u = adj_[v].find_next(u)) out.push_back(static_cast<int>(u));
    return out;
  }

  const std::vector<int>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<int> labels) {
    if (static_cast<int>(labels.size()) != vertex_count()) invalid_parameter("label count must equal vertex count");
    labels_ = std::move(labels);
  }

  // Induced subgraph on the given vertices, in the given order; labels carry over.
  Graph induced(const std::vector<int>& vertices) const {
    Graph out(static_cast<int>(vertices.size()));
    std::vector<int> labels;
    labels.reserve(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      labels.push_back(labels_[vertices[i]]);
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (has_edge(vertices[i], vertices[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
    out.labels_ = std::move(labels);
    return out;
  }

  // Same graph with vertex v renamed perm[v].
  Graph permuted(const std::vector<int>& perm) const {
    Graph out(vertex_count());
    for (int u = 0; u < vertex_count(); ++u) {
      for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v)) {
        out.add_edge(perm[u], perm[static_cast<int>(v)]);
      }
    }
    return out;
  }

  // Edge sets compared; labels are annotations and do not take part.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check(int v) const {
    if (v < 0 || v >= vertex_count()) invalid_parameter("vertex " + std::to_string(v) + " out of range");
  }

  std::vector<Bitset> adj_;
  std::vector<int> labels_;
};

// Directed graph without loops; out(v) holds the heads of arcs leaving v.
class DiGraph {
 public:
  DiGraph() = default;
  explicit DiGraph(int n) : out_(n, Bitset(n)) {}

  int vertex_count() const noexcept { return static_cast<int>(out_.size()); }

  void add_arc(int from, int to) {
    if (from < 0 || to < 0 || from >= vertex_count() || to >= vertex_count()) invalid_parameter("arc out of range");
    if (from == to) invalid_parameter("digraphs have no loops");
    out_[from].set(to);
  }

  bool has_arc(int from, int to) const noexcept { return out_[from].test(to); }
  const Bitset& out(int v) const noexcept { return out_[v]; }

  long long arc_count() const noexcept {
    long long total = 0;
    for (const auto& row : out_) total += static_cast<long long>(row.count());
    return total;
  }

  int in_degree(int v) const noexcept {
    int d = 0;
    for (const auto& row : out_) d += row.test(v) ? 1 : 0;
    return d;
  }

  // Underlying undirected graph.
  Graph shadow() const {
    Graph g(vertex_count());
    for (int u = 0; u < vertex_count(); ++u) {
      for (auto v = out_[u].find_first(); v != Bitset::npos; v = out_[u].find_next(v)) g.add_edge(u, static_cast<int>(v));
    }
    return g;
  }

  friend bool operator==(const DiGraph& a, const DiGraph& b) { return a.out_ == b.out_; }

 private:
  std::vector<Bitset> out_;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

// Star with centre 0 and the given number of leaves.
inline Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace pegraph
