#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace pegraph;

namespace {

bool is_complete(const Graph& g) { return classify_shape(g) == Shape::complete; }

std::vector<int> random_permutation(int n, unsigned seed) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST(GraphType, RejectsLoopsAndAsymmetry) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), Error);
  EXPECT_THROW(g.add_edge(0, 3), Error);
  std::vector<Bitset> rows(2, Bitset(2));
  rows[0].set(1);
  EXPECT_THROW(Graph::from_rows(rows), Error);
}

TEST(Enhanced, Examples) {
  for (int n : {1, 2, 7, 12}) EXPECT_TRUE(is_complete(enhanced_power_graph(make_cyclic(n)))) << n;
  EXPECT_EQ(classify_shape(enhanced_power_graph(build_group("Z2 x Z2"))), Shape::star);
  const auto sig = block_signature(enhanced_power_graph(make_generalized_quaternion(8)));
  ASSERT_TRUE(sig);
  EXPECT_EQ(*sig, (BlockSignature{2, {2, 2, 2}}));
}

TEST(Enhanced, MatchesDefinitionOracle) {
  for (const auto& g : props::corpus48().groups) {
    EXPECT_EQ(oracle::to_matrix(enhanced_power_graph(g)), oracle::enhanced_matrix(g.table())) << g.provenance();
  }
}

TEST(Power, Examples) {
  for (int p : {2, 3, 5, 7}) EXPECT_TRUE(is_complete(power_graph(make_cyclic(p))));
  EXPECT_EQ(classify_shape(power_graph(build_group("Z2 x Z2"))), Shape::star);
  const auto s3 = make_symmetric(3);
  const auto pow = power_graph(s3), pe = enhanced_power_graph(s3);
  for (int u = 0; u < 6; ++u) EXPECT_TRUE(pow.neighbours(u).is_subset_of(pe.neighbours(u)));
  // Z4: 1 and 3 generate, 2 is a power of both, so Pow(Z4) is complete; Z6 is not (2 and 3).
  EXPECT_TRUE(is_complete(power_graph(make_cyclic(4))));
  EXPECT_FALSE(power_graph(make_cyclic(6)).has_edge(2, 3));
}

TEST(Power, MatchesDefinitionOracle) {
  for (const auto& g : props::corpus48().groups) {
    EXPECT_EQ(oracle::to_matrix(power_graph(g)), oracle::power_matrix(g.table())) << g.provenance();
  }
}

TEST(Power, ContainedInEnhanced) {
  const auto r = props::power_within_enhanced(build_corpus(72));
  EXPECT_TRUE(r.ok()) << r.first;
}

TEST(DirectedPower, Examples) {
  const auto d = directed_power_graph(make_cyclic(4));
  EXPECT_TRUE(d.has_arc(1, 2));
  EXPECT_FALSE(d.has_arc(2, 1));
  for (const char* e : {"S4", "Q8", "Z12"}) {
    const auto g = build_group(e);
    const auto dg = directed_power_graph(g);
    EXPECT_EQ(dg.in_degree(0), g.order() - 1) << e;
    for (int v = 0; v < g.order(); ++v) EXPECT_FALSE(dg.has_arc(v, v));
  }
}

TEST(DirectedPower, ShadowIsPowerGraph) {
  for (const auto& g : build_corpus(72).groups) {
    EXPECT_EQ(directed_power_graph(g).shadow(), power_graph(g)) << g.provenance();
  }
}

TEST(CyclicGraph, Examples) {
  EXPECT_EQ(cyclic_graph(make_cyclic(10)).vertex_count(), 0);
  for (const char* e : {"Z3 x Z3 x Z3", "Q8"}) {
    const auto c = cyclic_graph(build_group(e));
    const auto comps = connected_components(c, std::vector<char>(c.vertex_count(), 0));
    for (const auto& comp : comps) {
      EXPECT_EQ(comp.size(), 2u);
      EXPECT_TRUE(c.has_edge(comp[0], comp[1]));
    }
    EXPECT_EQ(c.edge_count(), static_cast<long long>(comps.size()));
    EXPECT_EQ(comps.size(), std::string(e) == "Q8" ? 3u : 13u);
  }
}

TEST(CyclicGraph, LabelsAreGroupElements) {
  const auto g = build_group("Q8 x Z3");
  const auto c = cyclic_graph(g);
  const auto cyc = cyc_set(g);
  ASSERT_EQ(c.vertex_count(), g.order() - static_cast<int>(cyc.size()));
  for (int v = 0; v < c.vertex_count(); ++v) {
    EXPECT_FALSE(std::binary_search(cyc.begin(), cyc.end(), c.labels()[v]));
  }
}

TEST(Join, Examples) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(join(Graph(0), k4), k4);
  EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
  const auto g = build_group("Q8 x Z3");
  const auto r = graphs_isomorphic(join(cyclic_graph(g), complete_graph(6)), enhanced_power_graph(g));
  EXPECT_TRUE(r.isomorphic());
}

TEST(Join, ReconstructsEnhancedGraph) {
  const auto r = props::join_reconstruction(build_corpus(72));
  EXPECT_TRUE(r.ok()) << r.first;
}

TEST(Dominating, Examples) {
  EXPECT_EQ(dominating_vertices(complete_graph(5)), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(dominating_vertices(star_graph(4)), (std::vector<int>{0}));
  EXPECT_EQ(dominating_vertices(enhanced_power_graph(build_group("Q8 x Z3"))).size(), 6u);
}

TEST(Dominating, EqualsCycOverCorpus) {
  const auto r = props::cyc_is_dominating(build_corpus(72));
  EXPECT_TRUE(r.ok()) << r.first;
}

TEST(Shape, Examples) {
  EXPECT_EQ(classify_shape(enhanced_power_graph(make_cyclic(12))), Shape::complete);
  EXPECT_EQ(classify_shape(enhanced_power_graph(build_group("Z2 x Z2 x Z2"))), Shape::star);
  EXPECT_EQ(classify_shape(enhanced_power_graph(make_symmetric(3))), Shape::other);
  EXPECT_EQ(classify_shape(complete_graph(1)), Shape::complete);
  EXPECT_EQ(classify_shape(complete_graph(2)), Shape::complete);
  EXPECT_EQ(classify_shape(Graph(0)), Shape::complete);
  EXPECT_EQ(classify_shape(Graph(3)), Shape::other);
}

TEST(Shape, CompleteIffCyclic) {
  for (const auto& g : build_corpus(72).groups) {
    EXPECT_EQ(is_complete(enhanced_power_graph(g)), is_cyclic(g)) << g.provenance();
  }
}

TEST(BlockSignature, Examples) {
  EXPECT_EQ(*block_signature(enhanced_power_graph(build_group("Q8 x Z5"))), (BlockSignature{10, {10, 10, 10}}));
  EXPECT_EQ(*block_signature(enhanced_power_graph(build_group("Z2 x Z2 x Z2 x Z3"))),
            (BlockSignature{3, std::vector<int>(7, 3)}));
  // The two cyclic subgroups of order 4 share an involution, so no clique blocks.
  EXPECT_FALSE(block_signature(enhanced_power_graph(build_group("Z4 x Z2"))).has_value());
  EXPECT_EQ(*block_signature(enhanced_power_graph(make_cyclic(6))), (BlockSignature{6, {}}));
}

TEST(BlockSignature, SymmetricGroupS4) {
  // The 4-cycles, 3-cycles and the lone transpositions each sit in a single
  // maximal cyclic subgroup; only the identity dominates.
  const auto sig = block_signature(enhanced_power_graph(make_symmetric(4)));
  ASSERT_TRUE(sig.has_value());
  EXPECT_EQ(sig->dom_count, 1);
  EXPECT_EQ(sig->block_sizes, (std::vector<int>{1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3}));
}

TEST(BlockSignature, RelabelInvariantAndSumsToN) {
  int seed = 0;
  for (const auto& g : props::corpus48().groups) {
    const Graph pe = enhanced_power_graph(g);
    const auto sig = block_signature(pe);
    const auto moved = block_signature(pe.permuted(random_permutation(g.order(), ++seed)));
    ASSERT_EQ(sig.has_value(), moved.has_value()) << g.provenance();
    if (!sig) continue;
    EXPECT_EQ(*sig, *moved);
    EXPECT_GE(sig->dom_count, 1);
    EXPECT_EQ(sig->dom_count + std::accumulate(sig->block_sizes.begin(), sig->block_sizes.end(), 0), g.order());
  }
}

TEST(IdentityVertex, DominatesBothGraphs) {
  for (const auto& g : props::corpus48().groups) {
    EXPECT_EQ(enhanced_power_graph(g).degree(0), g.order() - 1);
    EXPECT_EQ(power_graph(g).degree(0), g.order() - 1);
  }
}

TEST(GroupGraph, KindDispatch) {
  const auto g = make_generalized_quaternion(8);
  EXPECT_EQ(group_graph(g, GraphKind::enhanced), enhanced_power_graph(g));
  EXPECT_EQ(group_graph(g, GraphKind::power), power_graph(g));
  EXPECT_EQ(group_graph(g, GraphKind::cyclic), cyclic_graph(g));
  EXPECT_THROW(group_graph(g, GraphKind::dpower), Error);
  EXPECT_EQ(parse_graph_kind("cyclic"), GraphKind::cyclic);
  EXPECT_THROW(parse_graph_kind("commuting"), Error);
}
