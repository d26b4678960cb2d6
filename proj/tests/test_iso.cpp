#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace pegraph;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph disjoint(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (int u = 0; u < a.vertex_count(); ++u)
    for (int v : a.sorted_neighbours(u)) g.add_edge(u, v);
  for (int u = 0; u < b.vertex_count(); ++u)
    for (int v : b.sorted_neighbours(u)) g.add_edge(a.vertex_count() + u, a.vertex_count() + v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> shuffled(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

GraphIsoOptions search_only() {
  GraphIsoOptions o;
  o.block_fast_path = false;
  return o;
}

}  // namespace

TEST(Refinement, EquitableAtFixpoint) {
  for (const auto& g : props::corpus48().groups) {
    const Graph pe = enhanced_power_graph(g);
    auto p = degree_partition(pe);
    refine(pe, p);
    EXPECT_TRUE(is_equitable(pe, p)) << g.provenance();
    if (!p.discrete()) {
      const int cell = p.target_cell();
      auto q = individualize(p, cell, p.cells[cell].back());
      refine(pe, q);
      EXPECT_TRUE(is_equitable(pe, q)) << g.provenance();
      EXPECT_GT(q.cells.size(), p.cells.size());
    }
  }
}

TEST(Refinement, TraceIsLabelFree) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(14, 0.3, rng);
    const Graph h = g.permuted(shuffled(14, rng));
    RefinementTrace tg, th;
    auto pg = degree_partition(g, &tg);
    auto ph = degree_partition(h, &th);
    refine(g, pg, &tg);
    refine(h, ph, &th);
    EXPECT_EQ(tg, th);
    ASSERT_EQ(pg.cells.size(), ph.cells.size());
    for (std::size_t i = 0; i < pg.cells.size(); ++i) EXPECT_EQ(pg.cells[i].size(), ph.cells[i].size());
  }
}

TEST(Screen, Examples) {
  EXPECT_FALSE(invariant_screen(enhanced_power_graph(make_cyclic(8)), enhanced_power_graph(build_group("Z2 x Z4"))));
  EXPECT_TRUE(invariant_screen(enhanced_power_graph(build_group("Z3 x Z3 x Z3")), enhanced_power_graph(make_heisenberg(3))));
  const Graph p = petersen();
  EXPECT_TRUE(invariant_screen(p, p));
  EXPECT_FALSE(invariant_screen(cycle(6), disjoint(cycle(3), cycle(3))));
  EXPECT_TRUE(invariant_screen(cycle(8), disjoint(cycle(4), cycle(4))));
}

TEST(GraphIso, Examples) {
  const auto a = enhanced_power_graph(build_group("Z3 x Z3 x Z3"));
  const auto b = enhanced_power_graph(make_heisenberg(3));
  for (bool fast : {true, false}) {
    const auto r = graphs_isomorphic(a, b, GraphIsoOptions{kDefaultIsoBudget, fast});
    ASSERT_TRUE(r.isomorphic()) << fast;
    EXPECT_TRUE(is_graph_isomorphism(a, b, r.mapping));
  }
  EXPECT_EQ(graphs_isomorphic(enhanced_power_graph(make_generalized_quaternion(8)), enhanced_power_graph(make_cyclic(8))).status,
            IsoStatus::non_isomorphic);
  const auto empty = graphs_isomorphic(Graph(0), Graph(0));
  EXPECT_TRUE(empty.isomorphic());
  EXPECT_TRUE(empty.mapping.empty());
  EXPECT_EQ(graphs_isomorphic(Graph(3), Graph(4)).status, IsoStatus::non_isomorphic);
}

TEST(GraphIso, SearchRefutesScreenSurvivors) {
  EXPECT_EQ(graphs_isomorphic(cycle(8), disjoint(cycle(4), cycle(4))).status, IsoStatus::non_isomorphic);
  EXPECT_EQ(graphs_isomorphic(cycle(12), disjoint(cycle(6), cycle(6))).status, IsoStatus::non_isomorphic);
  // Petersen vs the pentagonal prism: both cubic, triangle-free, 10 vertices.
  Graph prism(10);
  for (int i = 0; i < 5; ++i) {
    prism.add_edge(i, (i + 1) % 5);
    prism.add_edge(5 + i, 5 + (i + 1) % 5);
    prism.add_edge(i, i + 5);
  }
  EXPECT_TRUE(invariant_screen(petersen(), prism));
  EXPECT_EQ(graphs_isomorphic(petersen(), prism).status, IsoStatus::non_isomorphic);
}

TEST(GraphIso, RelabelledCopiesOfCorpusGraphs) {
  std::mt19937 rng(17);
  for (const auto& g : props::corpus48().groups) {
    for (GraphKind kind : {GraphKind::enhanced, GraphKind::power, GraphKind::cyclic}) {
      const Graph a = group_graph(g, kind);
      const Graph b = a.permuted(shuffled(a.vertex_count(), rng));
      for (bool fast : {true, false}) {
        const auto r = graphs_isomorphic(a, b, GraphIsoOptions{kDefaultIsoBudget, fast});
        ASSERT_TRUE(r.isomorphic()) << g.provenance() << " " << to_string(kind);
        EXPECT_TRUE(is_graph_isomorphism(a, b, r.mapping));
      }
    }
  }
}

TEST(GraphIso, RandomGraphsAgreeWithOracle) {
  std::mt19937 rng(23);
  int iso_count = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 9;
    const Graph a = random_graph(n, 0.45, rng);
    Graph b = a.permuted(shuffled(n, rng));
    if (trial % 2 == 1) {
      // Move one edge: same edge count, usually not isomorphic.
      std::vector<std::pair<int, int>> edges, non;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) (b.has_edge(u, v) ? edges : non).emplace_back(u, v);
      if (edges.empty() || non.empty()) continue;
      auto [u1, v1] = edges[rng() % edges.size()];
      auto [u2, v2] = non[rng() % non.size()];
      std::vector<Bitset> rows(n, Bitset(n));
      for (int u = 0; u < n; ++u) rows[u] = b.neighbours(u);
      rows[u1].reset(v1), rows[v1].reset(u1), rows[u2].set(v2), rows[v2].set(u2);
      b = Graph::from_rows(rows);
    }
    const bool expected = oracle::isomorphic(a, b);
    iso_count += expected;
    const auto r = graphs_isomorphic(a, b, search_only());
    EXPECT_EQ(r.isomorphic(), expected) << "trial " << trial;
    EXPECT_EQ(canonical_certificate(a) == canonical_certificate(b), expected) << "trial " << trial;
  }
  EXPECT_GT(iso_count, 100);
}

TEST(GraphIso, AgreesWithOracleOnCorpus) {
  for (GraphKind kind : {GraphKind::enhanced, GraphKind::power, GraphKind::cyclic}) {
    const auto r = props::iso_agrees_with_oracle(props::corpus48(), kind);
    EXPECT_TRUE(r.ok()) << to_string(kind) << ": " << r.violations << " disagreements, first " << r.first;
  }
}

TEST(GraphIso, FastPathMatchesSearch) {
  const auto& c = build_corpus(72);
  int compared = 0;
  for (const auto& [order, members] : c.by_order) {
    std::vector<Graph> graphs;
    for (int m : members) graphs.push_back(enhanced_power_graph(c.groups[m]));
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i; j < members.size(); ++j) {
        if (!block_signature(graphs[i]) || !block_signature(graphs[j])) continue;
        ++compared;
        const auto fast = graphs_isomorphic(graphs[i], graphs[j]);
        const auto slow = graphs_isomorphic(graphs[i], graphs[j], search_only());
        ASSERT_FALSE(slow.exhausted());
        EXPECT_EQ(fast.status, slow.status) << c.groups[members[i]].provenance() << " " << c.groups[members[j]].provenance();
      }
    }
  }
  EXPECT_GT(compared, 50);
}

TEST(GraphIso, BudgetExhaustionIsDistinct) {
  const Graph a = cycle(12);
  const Graph b = disjoint(cycle(6), cycle(6));
  const auto r = graphs_isomorphic(a, b, GraphIsoOptions{1, false});
  EXPECT_EQ(r.status, IsoStatus::budget_exhausted);
  EXPECT_FALSE(r.isomorphic());
  EXPECT_THROW(canonical_certificate(petersen(), 1), BudgetExhausted);
}

TEST(GraphIso, CertificateCheckedBeforeReturn) {
  const Graph a = petersen();
  std::vector<int> identity(10);
  std::iota(identity.begin(), identity.end(), 0);
  EXPECT_TRUE(is_graph_isomorphism(a, a, identity));
  std::swap(identity[0], identity[1]);
  EXPECT_FALSE(is_graph_isomorphism(a, a, identity));
}

TEST(Canonical, Examples) {
  std::mt19937 rng(2);
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(canonical_certificate(k4), canonical_certificate(k4.permuted(shuffled(4, rng))));
  EXPECT_EQ(canonical_certificate(enhanced_power_graph(build_group("Z3 x Z3 x Z3"))),
            canonical_certificate(enhanced_power_graph(make_heisenberg(3))));
  EXPECT_NE(canonical_certificate(star_graph(3)), canonical_certificate(k4));
  // 4-byte vertex count, then the 6 upper-triangle bits of K4 padded to a byte.
  EXPECT_EQ(canonical_certificate(k4), "00000004fc");
  EXPECT_EQ(canonical_certificate(Graph(0)), "00000000");
}

TEST(Canonical, RelabelInvariant) {
  std::mt19937 rng(41);
  for (const auto& g : props::corpus48().groups) {
    const Graph pe = enhanced_power_graph(g);
    EXPECT_EQ(canonical_certificate(pe), canonical_certificate(pe.permuted(shuffled(g.order(), rng))))
        << g.provenance();
  }
  const Graph p = petersen();
  EXPECT_EQ(canonical_certificate(p), canonical_certificate(p.permuted(shuffled(10, rng))));
}

TEST(Canonical, EqualityMatchesIsoVerdict) {
  for (GraphKind kind : {GraphKind::enhanced, GraphKind::power}) {
    const auto r = props::canonical_matches_iso(props::corpus48(), kind);
    EXPECT_TRUE(r.ok()) << r.first;
    EXPECT_GT(r.checked, 100);
  }
}

TEST(Determinism, RepeatedRunsAgree) {
  const auto g = build_group("Q8 x Z3"), h = build_group("Z3 x Q8");
  const Graph a = enhanced_power_graph(g), b = enhanced_power_graph(h);
  const auto first = graphs_isomorphic(a, b, search_only());
  const auto cert = canonical_certificate(a);
  for (int i = 0; i < 3; ++i) {
    const auto again = graphs_isomorphic(a, b, search_only());
    EXPECT_EQ(again.mapping, first.mapping);
    EXPECT_EQ(again.nodes, first.nodes);
    EXPECT_EQ(canonical_certificate(a), cert);
  }
  // Same answer after a JSON round trip.
  const Graph back = graph_from_json(graph_to_json(a, GraphKind::enhanced));
  EXPECT_EQ(graphs_isomorphic(back, b, search_only()).mapping, first.mapping);
}

TEST(Spectrum, PreservedUnderEveryCertificate) {
  const auto r = props::spectrum_under_certificates(build_corpus(72));
  EXPECT_TRUE(r.ok()) << r.first;
  EXPECT_GT(r.checked, 0);
}
