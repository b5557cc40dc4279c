#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

using namespace scatterkit;
using namespace sktest;

TEST(GeneralScheme, SingleEdge) {
  auto g = path_graph(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = general_strong_partition(g, 10, seed);
    EXPECT_LE(max_strong_diameter(g, r.partition), 10.0);
  }
}

TEST(GeneralScheme, TinyDeltaGivesZeroDiameterClusters) {
  auto g = gen_random_graph(20, 0.2, 3);
  auto r = general_strong_partition(g, 0.5, 1);
  EXPECT_EQ(max_strong_diameter(g, r.partition), 0.0);
  EXPECT_TRUE(verify_strong_sparse(g, r.partition, 1, g.size(), 0.5).ok);
}

TEST(GeneralScheme, ShiftsRespectHalfDelta) {
  auto g = gen_random_graph(64, 0.1, 8);
  double delta = graph_diameter(g) / 2;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = general_strong_partition(g, delta, seed);
    EXPECT_EQ(r.shifts.centers.size(), g.size());
    for (double s : r.shifts.shifts) EXPECT_LE(s, delta / 2);
    EXPECT_TRUE(check_mpx_path_property(g, r.partition));
    EXPECT_LE(max_strong_diameter(g, r.partition), delta + kEps);
  }
}

TEST(GeneralScheme, SparsityBoundMostSeeds) {
  auto g = gen_random_graph(64, 0.1, 21);
  const double n = 64, alpha = std::log2(n);
  double delta = graph_diameter(g) / 2;
  const double bound = 6 * std::pow(n, 1 / alpha) * std::log(n);
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto r = general_strong_partition(g, delta, seed);
    auto rep = verify_strong_sparse(g, r.partition, 8 * alpha, g.size(), delta);
    if (static_cast<double>(rep.worst_tau) <= bound) ++good;
  }
  EXPECT_GE(good, 95);
}

TEST(GeneralScheme, Errors) {
  EXPECT_THROW(general_strong_partition(WeightedGraph(1, {}), 1, 0), std::invalid_argument);
  EXPECT_THROW(general_strong_partition(path_graph(3), 0, 0), std::invalid_argument);
  EXPECT_THROW(general_strong_partition(path_graph(2), 1e-3, 0, 0), ResampleLimitExceeded);
}

TEST(GeneralScheme, Deterministic) {
  auto g = gen_random_graph(30, 0.2, 2);
  auto a = general_strong_partition(g, 3, 42);
  auto b = general_strong_partition(g, 3, 42);
  EXPECT_EQ(a.partition.clusters(), b.partition.clusters());
  EXPECT_EQ(a.shifts.shifts, b.shifts.shifts);
}

TEST(GreedyNet, Examples) {
  auto p5 = path_graph(5);
  EXPECT_EQ(greedy_net(p5, 10).size(), 1u);
  EXPECT_EQ(greedy_net(p5, 0.5), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(greedy_net(p5, 1), (VertexSet{0, 2, 4}));
}

TEST(GreedyNet, NetProperties) {
  auto g = gen_random_graph(40, 0.1, 5);
  for (double s : {1.0, 2.0, 3.0}) {
    auto net = greedy_net(g, s);
    DistanceMatrix d(g);
    for (Vertex a : net) {
      for (Vertex b : net) {
        if (a != b) {
          EXPECT_GT(d(a, b), s);
        }
      }
    }
    for (Vertex v = 0; v < g.size(); ++v) {
      double best = kInfinity;
      for (Vertex t : net) best = std::min(best, d(v, t));
      EXPECT_LE(best, s);
    }
  }
}

TEST(Betailed, ZeroTopAlwaysZero) {
  BetailedSampler s(2.0, 0.0, 1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_betailed(s), 0.0);
}

TEST(Betailed, AtomMatchesClosedForm) {
  const double lambda = 2, top = 3;
  BetailedSampler s(lambda, top, 7);
  const int n = 100000;
  int at_top = 0;
  double sum = 0;
  for (int i = 0; i < n; ++i) {
    auto d = s.draw();
    EXPECT_LE(d.value, top);
    EXPECT_GE(d.value, 0);
    EXPECT_EQ(d.value, std::min(d.raw, top));
    if (d.value == top) ++at_top;
    sum += d.value;
  }
  const double p = std::exp(-top / lambda);
  const double sd = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(static_cast<double>(at_top) / n, p, 3 * sd);
  EXPECT_LE(sum / n, lambda);
}

TEST(Exponential, Memoryless) {
  ExponentialSampler s(1.5, 3);
  const int n = 200000;
  const double a = 1, b = 0.8;
  int ge_a = 0, ge_ab = 0, ge_b = 0;
  for (int i = 0; i < n; ++i) {
    double x = s();
    EXPECT_GE(x, 0);
    if (x >= a) ++ge_a;
    if (x >= a + b) ++ge_ab;
    if (x >= b) ++ge_b;
  }
  const double cond = static_cast<double>(ge_ab) / ge_a;
  const double p = static_cast<double>(ge_b) / n;
  const double sd = std::sqrt(p * (1 - p) / ge_a);
  EXPECT_NEAR(cond, p, 3 * sd);
}

TEST(DoublingScheme, OneNetPoint) {
  auto g = gen_random_tree(20, 1);
  double diam = graph_diameter(g);
  auto r = doubling_strong_partition(g, diam, 1, 0);
  EXPECT_EQ(r.net.size(), 1u);
  EXPECT_EQ(r.partition.size(), 1u);
  EXPECT_LE(max_strong_diameter(g, r.partition), 10 * diam);
}

TEST(DoublingScheme, Grid16) {
  auto g = gen_grid(16, 16);
  const double delta = 8, ddim = 2;
  DoublingConstants k(ddim, 4);
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto r = doubling_strong_partition(g, delta, ddim, seed);
    EXPECT_TRUE(verify_strong_sparse(g, r.partition, 1, g.size(), 10 * delta).ok);
    EXPECT_TRUE(check_mpx_path_property(g, r.partition));
    for (double a : {1.0, 2.0}) {
      auto rep = verify_strong_sparse(g, r.partition, 58 * a, g.size(), delta);
      EXPECT_LE(static_cast<double>(rep.worst_tau), k.m_alpha(a));
    }
  }
}

TEST(DoublingScheme, PathTerminates) {
  auto g = path_graph(64);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto r = doubling_strong_partition(g, 16, 1, seed);
    EXPECT_LE(max_strong_diameter(g, r.partition), 160.0);
    for (std::size_t i = 0; i < r.partition.size(); ++i) {
      Vertex c = (*r.partition.centers())[i];
      EXPECT_EQ(r.partition.cluster_of(c), i);
    }
  }
}

TEST(DoublingScheme, Errors) {
  EXPECT_THROW(doubling_strong_partition(path_graph(4), 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(doubling_strong_partition(path_graph(4), 1, 0.5, 0), std::invalid_argument);
}

TEST(DoublingConstantsTest, Grid) {
  DoublingConstants k(2, 4);
  EXPECT_EQ(k.alphas, (std::vector<double>{1, 1.5, 2}));
  EXPECT_DOUBLE_EQ(k.r_alpha(1, 8), std::log(2.0) * 8);
  EXPECT_DOUBLE_EQ(k.m_alpha(2), 2 * k.s * 2);
}

TEST(EstimateDdim, Heuristic) {
  EXPECT_LE(estimate_ddim(path_graph(32)), 2.0);
  EXPECT_GE(estimate_ddim(gen_grid(8, 8)), 1.0);
}
