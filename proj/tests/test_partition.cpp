#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace scatterkit;
using namespace sktest;

namespace {

Partition p5_pairs() { return Partition(5, {{0, 1}, {2, 3}, {4}}, 4); }

Partition singletons(std::size_t n, double delta) {
  std::vector<VertexSet> c;
  for (Vertex v = 0; v < n; ++v) c.push_back({v});
  return Partition(n, std::move(c), delta);
}

Partition whole(const WeightedGraph& g, double delta) { return Partition(g.size(), {all_vertices(g)}, delta); }

}  // namespace

TEST(PartitionType, Validation) {
  EXPECT_THROW(Partition(3, {{0, 1}}, 1), NotAPartition);
  EXPECT_THROW(Partition(3, {{0, 1}, {1, 2}}, 1), NotAPartition);
  EXPECT_THROW(Partition(3, {{0, 1, 2}, {}}, 1), NotAPartition);
  EXPECT_THROW(Partition(3, {{0, 1}, {2}}, 1, std::vector<Vertex>{2, 2}), NotAPartition);
  Partition p(3, {{2, 0}, {1}}, 1, std::vector<Vertex>{0, 1});
  EXPECT_EQ(p.cluster(0), (VertexSet{0, 2}));
  EXPECT_EQ(p.cluster_of(2), 0u);
  EXPECT_THROW(p.check_vertex_count(path_graph(4)), NotAPartition);
}

TEST(PartitionType, FromLabels) {
  std::vector<std::size_t> labels{7, 7, 3, 3, 9};
  auto p = Partition::from_labels(labels, 4);
  ASSERT_EQ(p.size(), 3u);
  EXPECT_EQ(p.cluster(0), (VertexSet{0, 1}));
  EXPECT_EQ(p.cluster(1), (VertexSet{2, 3}));
  EXPECT_EQ(p.cluster(2), (VertexSet{4}));
}

TEST(VerifyScattering, P5PairsWorstTauTwo) {
  auto g = path_graph(5);
  for (auto mode : {PathMode::canonical, PathMode::all_paths}) {
    auto r = verify_scattering(g, p5_pairs(), 2, 3, 4, mode);
    EXPECT_TRUE(r.ok) << r.message;
    EXPECT_EQ(r.worst_tau, 2u);
  }
}

TEST(VerifyScattering, SingleClusterTauOne) {
  auto g = gen_random_graph(20, 0.2, 5);
  auto r = verify_scattering(g, whole(g, graph_diameter(g)), 1, 1, graph_diameter(g));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.worst_tau, 1u);
}

TEST(VerifyScattering, P3SingletonsFails) {
  auto g = path_graph(3);
  auto r = verify_scattering(g, singletons(3, 2), 1, 2, 2);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.worst_tau, 3u);
  EXPECT_EQ(r.witness.kind, WitnessKind::path);
  EXPECT_EQ(clusters_on(singletons(3, 2), r.witness.vertices), 3u);
}

TEST(VerifyScattering, DisconnectedClusterFails) {
  auto g = path_graph(3);
  Partition p(3, {{0, 2}, {1}}, 2);
  auto r = verify_scattering(g, p, 1, 3, 2);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness.kind, WitnessKind::cluster);
}

TEST(VerifyScattering, PathExplosion) {
  auto g = gen_grid(8, 8);
  EXPECT_THROW(measure_scattering_tau(g, singletons(64, 14), 14, PathMode::all_paths, 100), PathExplosion);
}

TEST(MeasureScattering, Examples) {
  auto g = path_graph(5);
  EXPECT_EQ(measure_scattering_tau(g, whole(g, 4), 4, PathMode::canonical).tau, 1u);
  EXPECT_EQ(measure_scattering_tau(g, p5_pairs(), 2, PathMode::all_paths).tau, 2u);
  for (std::size_t n : {4u, 7u}) {
    auto pn = path_graph(n);
    for (double L : {0.0, 1.0, 2.5, 3.0}) {
      EXPECT_EQ(measure_scattering_tau(pn, singletons(n, 0), L, PathMode::canonical).tau,
                static_cast<std::size_t>(std::floor(L)) + 1);
    }
  }
}

TEST(VerifyWeakSparse, Examples) {
  auto g = path_graph(3);
  EXPECT_TRUE(verify_weak_sparse(g, whole(g, 2), 1, 1, 2).ok);
  auto r2 = verify_weak_sparse(g, singletons(3, 2), 2, 2, 2);
  EXPECT_FALSE(r2.ok);
  EXPECT_EQ(r2.worst_tau, 3u);
  EXPECT_EQ(r2.witness.kind, WitnessKind::ball);
  EXPECT_EQ(r2.witness.center, 1u);
  EXPECT_TRUE(verify_weak_sparse(g, singletons(3, 2), 2, 3, 2).ok);
}

TEST(VerifyStrongSparse, Examples) {
  auto g = path_graph(3);
  auto r = verify_strong_sparse(g, singletons(3, 0), 1, 3, 0);
  EXPECT_EQ(r.worst_diameter, 0.0);
  EXPECT_TRUE(verify_strong_sparse(g, whole(g, 2), 1, 1, 2).ok);
  EXPECT_FALSE(verify_strong_sparse(g, whole(g, 1.5), 1, 1, 1.5).ok);
  Partition split(3, {{0, 2}, {1}}, 2);
  EXPECT_TRUE(verify_weak_sparse(g, split, 2, 3, 2).ok);
  EXPECT_FALSE(verify_strong_sparse(g, split, 2, 3, 2).ok);
}

TEST(VerifyStrongSparse, GeneralSchemeOn64Vertices) {
  auto g = gen_random_graph(64, 0.1, 11);
  double delta = graph_diameter(g) / 2;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto res = general_strong_partition(g, delta, seed);
    EXPECT_LE(max_strong_diameter(g, res.partition), delta + kEps);
    EXPECT_TRUE(verify_strong_sparse(g, res.partition, 1e9, g.size(), delta).ok);
  }
}

TEST(VerifyCover, Examples) {
  auto g = path_graph(5);
  SparseCover whole_cover{{all_vertices(g)}, 4, 1};
  EXPECT_TRUE(verify_cover(g, whole_cover, 1, 1, 4).ok);
  SparseCover two{{{0, 1, 2, 3}, {1, 2, 3, 4}}, 3, 2};
  EXPECT_TRUE(verify_cover(g, two, 2, 2, 3).ok);
  SparseCover missing{{{0, 1, 2, 3}}, 3, 2};
  auto r = verify_cover(g, missing, 2, 2, 3);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.witness.kind, WitnessKind::vertex);
  EXPECT_FALSE(verify_cover(g, two, 2, 1, 3).ok);
  auto cov = partition_to_cover(g, p5_pairs(), 2);
  EXPECT_TRUE(verify_cover(g, cov, 4, 3, 8).ok);
}

TEST(AsSigmaOne, Examples) {
  EXPECT_EQ(as_sigma_one(2, 3), (std::pair<double, std::size_t>{1, 6}));
  EXPECT_EQ(as_sigma_one(1, 7), (std::pair<double, std::size_t>{1, 7}));
  EXPECT_EQ(as_sigma_one(4, 5), (std::pair<double, std::size_t>{1, 20}));
}

class PartitionProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PartitionProperties, StrongImpliesWeakAndScattering) {
  auto g = gen_random_graph(30, 0.15, GetParam());
  double delta = graph_diameter(g) / 2;
  auto p = general_strong_partition(g, delta, GetParam()).partition;
  auto strong = verify_strong_sparse(g, p, 4, g.size(), delta);
  ASSERT_TRUE(strong.ok);
  auto weak = verify_weak_sparse(g, p, 4, g.size(), delta);
  EXPECT_TRUE(weak.ok);
  EXPECT_EQ(weak.worst_tau, strong.worst_tau);
  EXPECT_TRUE(verify_scattering(g, p, 4, g.size(), delta).ok);
}

TEST_P(PartitionProperties, ObservationSigmaOne) {
  auto g = gen_random_tree(40, GetParam(), true);
  for (double delta : {2.0, 4.0, 6.0}) {
    auto p = tree_scattering_partition(RootedTree(g), delta);
    ASSERT_TRUE(verify_scattering(g, p, 2, 3, delta, PathMode::all_paths).ok);
    EXPECT_TRUE(verify_scattering(g, p, 1, 6, delta, PathMode::all_paths).ok);
  }
}

TEST_P(PartitionProperties, CanonicalTauAtMostAllPaths) {
  auto g = GetParam() % 2 ? gen_grid(5, 5) : gen_random_graph(25, 0.2, GetParam(), 1000);
  for (double delta : {2.0, 3.0, 5.0}) {
    auto p = general_strong_partition(g, delta, GetParam()).partition;
    auto c = measure_scattering_tau(g, p, delta, PathMode::canonical);
    auto a = measure_scattering_tau(g, p, delta, PathMode::all_paths);
    EXPECT_LE(c.tau, a.tau);
  }
}

TEST_P(PartitionProperties, WitnessRechecks) {
  auto g = gen_random_graph(25, 0.2, GetParam() + 50);
  double delta = 3;
  auto p = general_strong_partition(g, delta, GetParam()).partition;
  auto sc = verify_scattering(g, p, 1, 1, delta, PathMode::all_paths);
  ASSERT_EQ(sc.witness.kind, WitnessKind::path);
  EXPECT_EQ(clusters_on(p, sc.witness.vertices), sc.worst_tau);
  EXPECT_TRUE(approx_le(path_length(g, sc.witness.vertices), delta));
  DistanceMatrix d(g);
  EXPECT_TRUE(approx_eq(path_length(g, sc.witness.vertices),
                        d(sc.witness.vertices.front(), sc.witness.vertices.back())));
  auto sp = verify_weak_sparse(g, p, 2, 1, delta);
  ASSERT_EQ(sp.witness.kind, WitnessKind::ball);
  EXPECT_EQ(clusters_on(p, ball(g, sp.witness.center, sp.witness.radius)), sp.worst_tau);
}

TEST_P(PartitionProperties, SparseBallOracleCriticalRadii) {
  auto g = gen_random_graph(20, 0.25, GetParam() + 9);
  auto p = general_strong_partition(g, 3, GetParam()).partition;
  auto rep = verify_weak_sparse(g, p, 2, g.size(), 3);
  DistanceMatrix d(g);
  std::size_t worst = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u = 0; u < g.size(); ++u) {
      if (d(v, u) > 1.5 + kEps) continue;
      worst = std::max(worst, clusters_on(p, ball(g, v, d(v, u))));
    }
  }
  EXPECT_EQ(rep.worst_tau, worst);
}

INSTANTIATE_TEST_SUITE_P(Seeds, PartitionProperties, ::testing::Values(1, 2, 3, 4, 5));
