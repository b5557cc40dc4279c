#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace scatterkit;
using namespace sktest;

namespace {
WeightedGraph triangle() { return WeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}); }
}  // namespace

TEST(CliqueTree, Triangle) {
  auto t = build_clique_tree(triangle());
  EXPECT_EQ(t.order, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(t.bag(0), (VertexSet{0}));
  EXPECT_EQ(t.bag(1), (VertexSet{0, 1}));
  EXPECT_EQ(t.bag(2), (VertexSet{0, 1, 2}));
  EXPECT_EQ(t.root(), 0u);
}

TEST(CliqueTree, TreeBagsAreEdges) {
  auto g = gen_random_tree(30, 4, true);
  auto t = build_clique_tree(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v == t.root()) {
      EXPECT_EQ(t.bag(v).size(), 1u);
      continue;
    }
    ASSERT_EQ(t.bag(v).size(), 2u);
    const auto& b = t.bag(v);
    EXPECT_TRUE(g.has_edge(b[0], b[1]));
  }
}

TEST(CliqueTree, C4NotChordal) {
  try {
    build_clique_tree(gen_cycle(4));
    FAIL() << "expected NotChordal";
  } catch (const NotChordal& e) {
    const auto& c = e.cycle();
    ASSERT_GE(c.size(), 4u);
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(gen_cycle(4).has_edge(c[i], c[(i + 1) % c.size()]));
  }
  EXPECT_FALSE(is_chordal(gen_cycle(4)));
  EXPECT_FALSE(is_chordal(gen_grid(3, 3)));
  EXPECT_TRUE(is_chordal(triangle()));
}

TEST(ChordalScattering, TriangleOneCluster) {
  auto cp = chordal_scattering(triangle(), 4);
  EXPECT_EQ(cp.partition.size(), 1u);
  EXPECT_EQ(*cp.partition.centers(), (std::vector<Vertex>{0}));
  EXPECT_EQ(cp.label, (std::vector<std::size_t>{0, 1, 1}));
}

TEST(ChordalScattering, SmallDeltaSingletons) {
  auto g = gen_random_chordal(30, 3, 2);
  EXPECT_EQ(chordal_scattering_partition(g, 2).size(), g.size());
  EXPECT_EQ(chordal_scattering_partition(g, 1).size(), g.size());
}

TEST(ChordalScattering, RejectsWeighted) {
  EXPECT_THROW(chordal_scattering_partition(path_graph(3, 2.0), 4), std::invalid_argument);
  EXPECT_THROW(chordal_scattering_partition(gen_cycle(5), 4), NotChordal);
}

TEST(ChordalScattering, Random3Tree) {
  auto g = gen_random_chordal(40, 3, 7);
  ASSERT_TRUE(is_chordal(g));
  for (long delta = 3; delta <= 8; ++delta) {
    auto cp = chordal_scattering(g, delta);
    auto r = verify_scattering(g, cp.partition, 2, 3, static_cast<double>(delta));
    EXPECT_TRUE(r.ok) << "delta " << delta << ": " << r.message;
    EXPECT_TRUE(check_chordal_bag_invariant(g, cp));
  }
}

class ChordalProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(ChordalProperties, ClustersRadiusAndScattering) {
  const std::size_t k = 1 + GetParam() % 4;
  auto g = gen_random_chordal(60, k, GetParam());
  ASSERT_TRUE(is_chordal(g));
  for (long delta = 3; delta <= 10; ++delta) {
    auto cp = chordal_scattering(g, delta);
    const auto& p = cp.partition;
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_EQ(connected_components(g, p.cluster(i)).size(), 1u);
      auto dm = shortest_paths(g, (*p.centers())[i]);
      for (Vertex v : p.cluster(i)) EXPECT_LE(dm.dist[v], static_cast<double>(cp.r));
    }
    EXPECT_TRUE(check_chordal_bag_invariant(g, cp));
    auto r = verify_scattering(g, p, 2, 3, static_cast<double>(delta), PathMode::all_paths, 100000);
    EXPECT_TRUE(r.ok) << "delta " << delta << ": " << r.message;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, ChordalProperties, ::testing::Values(1, 2, 3, 4, 5, 6, 7, 8));
