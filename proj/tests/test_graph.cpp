#include "oracles.hpp"

#include <prym/graph.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace prym;

TEST(Betti1, TreeHasNoCycles) {
  const Multigraph tree({{"a", 1}, {"b", 1}}, {{"e", 0, 1}});
  EXPECT_EQ(betti1(tree), 0u);
}

TEST(Betti1, FiveBanana) { EXPECT_EQ(betti1(oracle::banana(5)), 4u); }

TEST(Betti1, SingleLoop) { EXPECT_EQ(betti1(oracle::rose(1, 1)), 1u); }

TEST(SubgraphBetti1, ThreeOfFiveParallelEdges) {
  const auto g = oracle::banana(5);
  EXPECT_EQ(subgraph_betti1(g, EdgeSubset::of(5, {0, 2, 4})), 2u);
}

TEST(SubgraphBetti1, EmptyAndLoop) {
  const auto g = oracle::rose(2, 1);
  EXPECT_EQ(subgraph_betti1(g, EdgeSubset(2)), 0u);
  EXPECT_EQ(subgraph_betti1(g, EdgeSubset::of(2, {1})), 1u);
}

TEST(SubgraphBetti1, RejectsForeignSubset) {
  const auto g = oracle::banana(3);
  EXPECT_THROW((void)subgraph_betti1(g, EdgeSubset(4)), Error);
}

TEST(ValencyProfile, Examples) {
  const auto b = oracle::banana(5);
  EXPECT_EQ(valency_profile(b, EdgeSubset::full(5)), (std::vector<std::size_t>{5, 5}));
  EXPECT_EQ(valency_profile(b, EdgeSubset(5)), (std::vector<std::size_t>{0, 0}));
  const auto r = oracle::rose(2, 0);
  EXPECT_EQ(valency_profile(r, EdgeSubset::of(2, {0})), (std::vector<std::size_t>{2}));
}

TEST(IsStable, Examples) {
  EXPECT_TRUE(is_stable(Multigraph({{"v", 2}}, {})));
  EXPECT_FALSE(is_stable(Multigraph({{"v", 0}}, {{"l", 0, 0}})));
  EXPECT_TRUE(is_stable(Multigraph({{"a", 0}, {"b", 0}}, {{"1", 0, 1}, {"2", 0, 1}, {"3", 0, 1}})));
  // Stable vertices but total genus 1.
  EXPECT_FALSE(is_stable(Multigraph({{"v", 1}}, {})));
}

TEST(DualGraph, RejectsUnstableAndDisconnected) {
  try {
    DualGraph({{"v", 0}}, {{"l", 0, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStable);
  }
  try {
    DualGraph({{"a", 2}, {"b", 2}}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotStable);
  }
}

TEST(Multigraph, RejectsBadIds) {
  EXPECT_THROW(Multigraph({{"a", 1}, {"a", 1}}, {}), Error);
  EXPECT_THROW(Multigraph({{"a", 1}}, {{"e", 0, 3}}), Error);
  EXPECT_THROW(Multigraph({{"a", 1}}, {{"e", 0, 0}, {"e", 0, 0}}), Error);
}

TEST(QuasistableModel, CurveGraphKeepsGenus) {
  const auto g = oracle::banana(4, 1, 0);
  const QuasistableModel x(g, EdgeSubset::of(4, {0, 3}));
  const auto curve = x.curve_graph();
  EXPECT_EQ(curve.vertex_count(), 4u);
  EXPECT_EQ(curve.edge_count(), 6u);
  EXPECT_EQ(total_genus(curve), g.genus());
  for (std::size_t c = 2; c < 4; ++c) {
    EXPECT_TRUE(x.is_exceptional(c));
    EXPECT_EQ(curve.valency(c), 2u);
    EXPECT_EQ(curve.vertex(c).genus, 0u);
  }
  EXPECT_EQ(x.component_id(2), "E(e1)");
  EXPECT_EQ(x.component_id(3), "E(e4)");
}

TEST(GraphProperties, RandomGraphs) {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 300; ++it) {
    const auto g = oracle::random_graph(rng, 5, 9, 2);
    EXPECT_EQ(betti1(g), g.edge_count() - g.vertex_count() + 1);
    EXPECT_EQ(g.genus(), g.genus_sum() + betti1(g));
    EXPECT_EQ(subgraph_betti1(g, EdgeSubset::full(g.edge_count())), betti1(g));

    // Adding edges one by one: b1 grows exactly when the edge closes a cycle.
    EdgeSubset sub(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      const auto before = subgraph_betti1(g, sub);
      const auto before_mask = oracle::to_mask(sub);
      sub.insert(i);
      const auto after = subgraph_betti1(g, sub);
      EXPECT_GE(after, before);
      EXPECT_LE(after, before + 1);
      EXPECT_EQ(static_cast<std::int64_t>(after), oracle::mask_betti(g, before_mask | (std::uint64_t{1} << i)));
      const auto comp = sub.complement();
      EXPECT_EQ(sub.size() + comp.size(), g.edge_count());
    }
  }
}
