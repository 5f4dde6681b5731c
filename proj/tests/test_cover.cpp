#include "oracles.hpp"

#include <prym/cover.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace prym;

namespace {

MonodromyData split_all(const DualGraph& g, std::map<std::size_t, bool> twists = {}) {
  MonodromyData d;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) d.sheets[v] = SheetType::split;
  d.twists = std::move(twists);
  return d;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

}  // namespace

TEST(BuildCover, SmoothConnectedType) {
  for (std::uint64_t g = 2; g <= 5; ++g) {
    const DualGraph base({{"v", g}}, {});
    MonodromyData d;
    d.sheets[0] = SheetType::connected;
    const auto cg = build_cover(base, EdgeSubset(0), d);
    ASSERT_EQ(cg.cover.vertex_count(), 1u);
    EXPECT_EQ(cg.cover.vertex(0).genus, 2 * g - 1);
    EXPECT_EQ(cg.cover.edge_count(), 0u);
    EXPECT_TRUE(verify_admissible(cg).ok);
  }
}

TEST(BuildCover, TwoBananaBothBlown) {
  const auto g = oracle::banana(2);
  const auto cg = build_cover(g, EdgeSubset::full(2), MonodromyData{});
  ASSERT_EQ(cg.cover.vertex_count(), 2u);
  EXPECT_EQ(cg.cover.vertex(0).genus, 2u);
  EXPECT_EQ(cg.cover.vertex(1).genus, 2u);
  EXPECT_EQ(cg.fixed_edges.size(), 2u);
  EXPECT_EQ(total_genus(cg.cover), 5u);
  const auto rep = verify_admissible(cg);
  EXPECT_TRUE(rep.ok) << (rep.diagnostics.empty() ? "" : rep.diagnostics[0]);
}

TEST(BuildCover, TwoBananaSplitWithTwist) {
  const auto g = oracle::banana(2);
  const auto cg = build_cover(g, EdgeSubset(2), split_all(g, {{0, false}, {1, true}}));
  EXPECT_EQ(cg.cover.vertex_count(), 4u);
  EXPECT_EQ(cg.cover.edge_count(), 4u);
  for (const auto& v : cg.cover.vertices()) EXPECT_EQ(v.genus, 1u);
  EXPECT_EQ(total_genus(cg.cover), 5u);
  EXPECT_TRUE(cg.fixed_edges.empty());
  EXPECT_TRUE(verify_admissible(cg).ok);
}

TEST(BuildCover, Errors) {
  const auto g = oracle::banana(2);
  EXPECT_EQ(kind_of([&] { (void)build_cover(g, EdgeSubset(2), split_all(g)); }), ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([&] { (void)build_cover(g, EdgeSubset::full(2), split_all(g)); }), ErrorKind::SplitInvalid);
  EXPECT_EQ(kind_of([&] { (void)build_cover(g, EdgeSubset(2), MonodromyData{}); }), ErrorKind::SplitInvalid);
  EXPECT_EQ(kind_of([&] { (void)build_cover(g, EdgeSubset::of(2, {0}), MonodromyData{}); }), ErrorKind::NotEulerian);

  const auto r = oracle::rose(2, 0);
  MonodromyData rational;
  rational.sheets[0] = SheetType::connected;
  EXPECT_EQ(kind_of([&] { (void)build_cover(r, EdgeSubset(2), rational); }), ErrorKind::SplitInvalid);

  MonodromyData blown_twist;
  blown_twist.twists[0] = true;
  EXPECT_EQ(kind_of([&] { (void)build_cover(g, EdgeSubset::full(2), blown_twist); }), ErrorKind::SplitInvalid);
}

TEST(VerifyAdmissible, BranchSwapOnFixedNode) {
  auto cg = build_cover(oracle::banana(2), EdgeSubset::full(2), MonodromyData{});
  cg.swaps_branches[cg.fixed_edges[0]] = true;
  const auto rep = verify_admissible(cg);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.diagnostics.empty());
}

TEST(VerifyAdmissible, WrongGenus) {
  auto cg = build_cover(oracle::banana(2), EdgeSubset::full(2), MonodromyData{});
  auto vs = cg.cover.vertices();
  vs[0].genus += 1;
  vs[1].genus += 1;
  cg.cover = Multigraph(vs, cg.cover.edges());
  EXPECT_FALSE(verify_admissible(cg).ok);
}

TEST(VerifyAdmissible, FixedPointOffTheNodes) {
  // A connected-type sheet over a vertex claimed to carry a ramified genus.
  auto cg = build_cover(oracle::smooth(2), EdgeSubset(0), [] {
    MonodromyData d;
    d.sheets[0] = SheetType::connected;
    return d;
  }());
  cg.cover = Multigraph({{"v", 4}}, {});
  EXPECT_FALSE(verify_admissible(cg).ok);
}

TEST(EnumerateMonodromies, Examples) {
  EXPECT_EQ(enumerate_monodromies(DualGraph({{"v", 1}, {"w", 1}}, {{"e", 0, 1}}), EdgeSubset(1)).size(), 3u);
  // Connected-type, or split with the loop lifts exchanged.
  const auto ell = DualGraph({{"v", 1}}, {{"l", 0, 0}});
  EXPECT_EQ(enumerate_monodromies(ell, EdgeSubset(1)).size(), 2u);

  const auto rose = enumerate_monodromies(oracle::rose(2, 0), EdgeSubset(2));
  EXPECT_EQ(rose.size(), 3u);
  for (const auto& d : rose) EXPECT_FALSE(d.twists.empty());

  EXPECT_EQ(enumerate_monodromies(oracle::banana(4), EdgeSubset::full(4)).size(), 1u);
}

TEST(EnumerateMonodromies, CapExceeded) {
  EXPECT_EQ(kind_of([&] { (void)enumerate_monodromies(oracle::rose(6, 1), EdgeSubset(6), 5); }), ErrorKind::CapExceeded);
}

TEST(CoverLaws, RandomGraphs) {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 60; ++it) {
    const auto g = oracle::random_graph(rng, 4, 6, 1);
    for (const auto& sigma : enumerate_eulerian(g)) {
      std::size_t n = 0;
      for_each_monodromy(
          g, sigma,
          [&](const MonodromyData& d) {
            ++n;
            const auto cg = build_cover(g, sigma, d);
            const auto rep = verify_admissible(cg);
            EXPECT_TRUE(rep.ok) << (rep.diagnostics.empty() ? "" : rep.diagnostics[0]);
            EXPECT_EQ(total_genus(cg.cover), 2 * g.genus() - 1);
            EXPECT_EQ(cg.fixed_edges.size(), sigma.size());
            EXPECT_EQ(cg.cover.edge_count(), 2 * g.edge_count() - sigma.size());
          },
          kDefaultMonodromyBits, 256);
      EXPECT_GT(n, 0u);
    }
  }
}
