#include "oracles.hpp"

#include <prym/search.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace prym;

namespace {

SearchSpace space(std::size_t max_v, std::size_t max_e, std::uint64_t max_genus, std::vector<Filter> filters = {}) {
  SearchSpace s;
  s.max_vertices = max_v;
  s.max_edges = max_e;
  s.max_genus_per_vertex = max_genus;
  s.filters = std::move(filters);
  return s;
}

Multigraph relabel(const Multigraph& g, std::mt19937_64& rng) {
  std::vector<std::size_t> p(g.vertex_count());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<Vertex> vs(g.vertex_count());
  for (std::size_t i = 0; i < p.size(); ++i) vs[p[i]] = {"w" + std::to_string(i), g.vertex(i).genus};
  std::vector<Edge> es;
  for (const auto& e : g.edges()) es.push_back({e.id, p[e.v], p[e.u]});
  std::shuffle(es.begin(), es.end(), rng);
  return Multigraph(vs, es);
}

}  // namespace

TEST(EnumerateGraphs, HandCountTwoVerticesTwoEdges) {
  // Hand list: rose(2) g0; g1 + loop; g1 + 2 loops; (1,1) one edge; (1,1) double edge;
  // (0 with loop)-(1); (1 with loop)-(1).
  const auto all = enumerate_graphs(space(2, 2, 1));
  EXPECT_EQ(all.size(), 7u);
  for (const auto& g : all) {
    EXPECT_LE(g.vertex_count(), 2u);
    EXPECT_LE(g.edge_count(), 2u);
    EXPECT_TRUE(is_stable(g));
  }
}

TEST(EnumerateGraphs, SingleSmoothCurve) {
  auto s = space(1, 0, 2);
  const auto all = enumerate_graphs(s);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].genus(), 2u);
  EXPECT_EQ(all[0].edge_count(), 0u);
}

TEST(EnumerateGraphs, FiveBananaOnce) {
  const auto target = oracle::banana(5, 0, 0);
  const auto all = enumerate_graphs(space(2, 5, 0));
  EXPECT_EQ(std::count_if(all.begin(), all.end(), [&](const DualGraph& g) { return oracle::brute_isomorphic(g, target); }),
            1);
}

TEST(EnumerateGraphs, SpaceTooLarge) {
  try {
    (void)enumerate_graphs(space(9, 3, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SpaceTooLarge);
  }
  EXPECT_THROW((void)enumerate_graphs(space(8, 30, 3)), Error);
}

TEST(DedupSoundness, PairwiseNonIsomorphic) {
  const auto all = enumerate_graphs(space(5, 5, 1));
  ASSERT_GT(all.size(), 100u);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i].vertex_count() != all[j].vertex_count() || all[i].edge_count() != all[j].edge_count()) continue;
      ASSERT_FALSE(oracle::brute_isomorphic(all[i], all[j])) << i << " " << j;
    }
}

TEST(DedupSoundness, CompleteAgainstRandomGraphs) {
  const auto all = enumerate_graphs(space(4, 5, 1));
  std::mt19937_64 rng(3);
  for (int it = 0; it < 150; ++it) {
    const auto g = oracle::random_graph(rng, 4, 5, 1);
    if (g.edge_count() > 5) continue;
    const auto hits = std::count_if(all.begin(), all.end(), [&](const DualGraph& h) { return oracle::brute_isomorphic(g, h); });
    EXPECT_EQ(hits, 1);
  }
}

TEST(CanonicalForm, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 200; ++it) {
    const auto g = oracle::random_graph(rng, 6, 9, 2);
    const auto h = relabel(g, rng);
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_TRUE(are_isomorphic(g, h));
    const auto other = oracle::random_graph(rng, 6, 9, 2);
    EXPECT_EQ(are_isomorphic(g, other), oracle::brute_isomorphic(g, other));
  }
}

TEST(FindLCollision, ReconstructsBothCandidates) {
  const auto chain = oracle::double_three_banana();
  const auto five = oracle::banana(5, 0, 0);
  const auto pairs = find_L_collision(space(3, 6, 0));
  const bool found = std::any_of(pairs.begin(), pairs.end(), [&](const CollisionPair& p) {
    return (are_isomorphic(p.first, chain) && are_isomorphic(p.second, five)) ||
           (are_isomorphic(p.first, five) && are_isomorphic(p.second, chain));
  });
  EXPECT_TRUE(found);
  for (const auto& p : pairs) {
    EXPECT_FALSE(are_isomorphic(p.first, p.second));
    EXPECT_EQ(multiplicity_sets(p.first).prym, p.prym);
    EXPECT_EQ(multiplicity_sets(p.second).prym, p.prym);
    EXPECT_NE(p.first_spin, p.second_spin);
  }
}

TEST(FindLCollision, TreesAndEulerianGraphsGiveNone) {
  EXPECT_TRUE(find_L_collision(space(4, 3, 2, {Filter::compact_type})).empty());
  EXPECT_TRUE(find_L_collision(space(3, 6, 1, {Filter::eulerian})).empty());
}

TEST(Filters, EulerianOnly) {
  for (const auto& g : enumerate_graphs(space(3, 5, 1, {Filter::eulerian}))) EXPECT_TRUE(is_eulerian_graph(g));
  EXPECT_EQ(parse_filter("valency4"), Filter::even_valency_at_least_4);
  EXPECT_FALSE(parse_filter("nope").has_value());
}

TEST(CorollarySweep, NoCounterexamples) {
  const auto sweep = verify_corollary_over_space(space(3, 8, 1));
  EXPECT_GT(sweep.graphs_checked, 0u);
  EXPECT_GT(sweep.premise_i, 0u);
  EXPECT_GT(sweep.premise_ii, 0u);
  EXPECT_TRUE(sweep.counterexamples.empty());
}

TEST(EtaleLocus, ReducedIffCompactType) {
  for (const auto& g : enumerate_graphs(space(3, 4, 1))) {
    const auto sets = multiplicity_sets(g);
    EXPECT_EQ(sets.prym == ExponentSet{0}, betti1(g) == 0);
  }
}
