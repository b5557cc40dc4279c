#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace scatterkit;
using namespace sktest;

TEST(CoverToPartition, WholeCover) {
  auto g = path_graph(5);
  SparseCover c{{all_vertices(g)}, 4, 2};
  auto p = cover_to_partition(g, c);
  ASSERT_EQ(p.size(), 1u);
}

TEST(CoverToPartition, FirstFitOnP5) {
  auto g = path_graph(5);
  SparseCover c{{{0, 1, 2, 3}, {1, 2, 3, 4}}, 2, 2};
  ASSERT_TRUE(verify_cover(g, c, 2, 2, 3).ok);
  auto p = cover_to_partition(g, c);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.cluster(0), (VertexSet{0, 1, 2}));
  EXPECT_EQ(p.cluster(1), (VertexSet{3, 4}));
  EXPECT_TRUE(verify_weak_sparse(g, p, 2, 2, 3).ok);
}

TEST(CoverToPartition, NotACover) {
  auto g = path_graph(5);
  SparseCover c{{{0, 1, 2}, {3, 4}}, 2, 2};
  try {
    cover_to_partition(g, c);
    FAIL();
  } catch (const NotACover& e) {
    EXPECT_EQ(e.vertex(), 2u);
  }
}

TEST(PartitionToCover, Examples) {
  auto g = path_graph(5);
  Partition whole(5, {all_vertices(g)}, 4);
  auto c = partition_to_cover(g, whole, 2);
  ASSERT_EQ(c.clusters.size(), 1u);
  EXPECT_EQ(c.clusters[0].size(), 5u);
  Partition pairs(5, {{0, 1}, {2, 3}, {4}}, 4);
  auto cov = partition_to_cover(g, pairs, 2);
  EXPECT_EQ(cov.sigma, 4.0);
  EXPECT_EQ(cov.delta, 8.0);
  EXPECT_EQ(cov.clusters[0], (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(cov.clusters[2], (VertexSet{2, 3, 4}));
  EXPECT_TRUE(verify_cover(g, cov, 4, 3, 8).ok);
}

TEST(PartitionToCover, PreservesStrongDiameter) {
  auto g = gen_random_graph(40, 0.1, 3);
  auto p = general_strong_partition(g, 4, 1).partition;
  auto cov = partition_to_cover(g, p, 2);
  for (const auto& c : cov.clusters) EXPECT_LE(strong_diameter(g, c), cov.delta + kEps);
}

TEST(Kpr, PathR1) {
  auto g = path_graph(12);
  auto k = kpr_cover(g, 1, 8);
  EXPECT_EQ(k.partitions, 2u);
  EXPECT_DOUBLE_EQ(k.delta_prime, 4.0);
  auto r = verify_cover(g, k.cover, k.cover.sigma, 2, k.cover.delta);
  EXPECT_TRUE(r.ok) << r.message;
}

TEST(Kpr, HugeDeltaSingleClusters) {
  auto g = gen_random_planar(30, 2);
  double diam = graph_diameter(g);
  auto k = kpr_cover(g, 2, 4 * 2 * 4 * diam);
  EXPECT_EQ(k.cover.clusters.size(), 4u);
  for (const auto& c : k.cover.clusters) EXPECT_EQ(c.size(), g.size());
}

TEST(Kpr, PlanarR5) {
  auto g = gen_random_planar(100, 7);
  auto k = kpr_cover(g, 5, 5);
  auto r = verify_cover(g, k.cover, k.cover.sigma, 32, k.cover.delta);
  EXPECT_TRUE(r.ok) << r.message;
  EXPECT_LE(r.worst_tau, 32u);
  EXPECT_GT(k.measured_diameter, 0);
  auto p = cover_to_partition(g, k.cover);
  EXPECT_TRUE(verify_weak_sparse(g, p, k.cover.sigma, r.worst_tau, k.cover.delta).ok);
}

TEST(Kpr, StructuralPadding) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto g = gen_random_planar(60, seed);
    for (std::size_t r : {1u, 2u, 3u}) {
      auto k = kpr_cover(g, r, 0.1 * 2 * static_cast<double>(r * r));
      std::vector<VertexMask> masks;
      for (const auto& c : k.cover.clusters) masks.push_back(make_mask(g.size(), c));
      for (Vertex v = 0; v < g.size(); ++v) {
        auto b = ball(g, v, k.delta_prime / 4);
        bool found = false;
        for (const auto& m : masks) {
          if (std::all_of(b.begin(), b.end(), [&](Vertex u) { return m[u] != 0; })) found = true;
        }
        EXPECT_TRUE(found) << "vertex " << v << " r " << r;
      }
    }
  }
}

TEST(Kpr, Errors) {
  EXPECT_THROW(kpr_cover(path_graph(3), 0, 1), std::invalid_argument);
  EXPECT_THROW(kpr_cover(path_graph(3), 1, 1, 0), std::invalid_argument);
}

class CoverProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(CoverProperties, RoundTripOnSchemeOutputs) {
  auto tree = gen_random_tree(60, GetParam());
  for (double delta : {5.0, 12.0}) {
    auto ps = tree_scattering_partition(RootedTree(tree), delta);
    auto ball_tau = verify_weak_sparse(tree, ps, 2, tree.size(), delta).worst_tau;
    EXPECT_TRUE(verify_cover(tree, partition_to_cover(tree, ps, 2), 4, ball_tau, 2 * delta).ok);
    auto pw = tree_weak_partition(RootedTree(tree), delta);
    EXPECT_TRUE(verify_cover(tree, partition_to_cover(tree, pw, 4), 6, 3, 1.5 * delta).ok);
  }
  auto cac = gen_random_cactus(50, GetParam());
  auto pc = cactus_scattering_partition(cac, 8);
  auto sc = verify_weak_sparse(cac, pc, 4, cac.size(), 8);
  EXPECT_TRUE(verify_cover(cac, partition_to_cover(cac, pc, 4), 6, sc.worst_tau, 12).ok);
}

TEST_P(CoverProperties, CoverToPartitionNeverIncreasesTau) {
  auto g = gen_random_planar(50, GetParam());
  auto k = kpr_cover(g, 2, 1.6);
  auto rc = verify_cover(g, k.cover, k.cover.sigma, 4, k.cover.delta);
  ASSERT_TRUE(rc.ok);
  auto p = cover_to_partition(g, k.cover);
  auto rp = verify_weak_sparse(g, p, k.cover.sigma, 4, k.cover.delta);
  EXPECT_TRUE(rp.ok);
  EXPECT_LE(rp.worst_tau, rc.worst_tau);
}

INSTANTIATE_TEST_SUITE_P(Seeds, CoverProperties, ::testing::Values(1, 2, 3, 4));
