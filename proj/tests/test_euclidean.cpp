#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace scatterkit;

TEST(GridCell, Examples) {
  EXPECT_EQ(grid_cell(Point{0, 0, 0}, 1), (Cell{0, 0, 0}));
  const double s = grid_scale(2, 3);
  EXPECT_EQ(grid_cell(Point{s, 0}, s), (Cell{1, 0}));
  EXPECT_EQ(grid_cell(Point{0.5, 1.7}, 1), (Cell{0, 1}));
  EXPECT_EQ(grid_cell(Point{-0.5}, 1), (Cell{-1}));
  EXPECT_THROW(grid_cell(Point{std::nan("")}, 1), std::invalid_argument);
}

TEST(SegmentCells, Examples) {
  EXPECT_EQ(segment_cells(Point{0.3, 0.3}, Point{0.3, 0.3}, 1).size(), 1u);
  auto c = segment_cells(Point{0.5, 0.5}, Point{1.5, 0.5}, 1);
  EXPECT_EQ(c, (std::vector<Cell>{{0, 0}, {1, 0}}));
  EXPECT_THROW(segment_cells(Point{0}, Point{0, 1}, 1), std::invalid_argument);
}

TEST(SegmentCells, CornerCrossingAdvancesTogether) {
  auto c = segment_cells(Point{0.5, 0.5}, Point{1.5, 1.5}, 1);
  EXPECT_EQ(c, (std::vector<Cell>{{0, 0}, {1, 1}}));
}

TEST(RemarkFixture, ExactlyTwoD) {
  for (std::size_t d = 1; d <= 8; ++d) {
    auto [a, b] = remark_fixture(d);
    EXPECT_EQ(segment_cells(a, b, 1).size(), 2 * d) << "d = " << d;
  }
}

TEST(GridScattering, OneDimension) {
  auto r = verify_grid_scattering(1, 1, 20000, 3);
  EXPECT_TRUE(r.ok);
  EXPECT_LE(r.max_cells, 2u);
}

TEST(GridScattering, ThreeDimensions) {
  auto r = verify_grid_scattering(3, 2, 100000, 4);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.max_cells, 6u);
  EXPECT_EQ(r.trials, 100001u);
}

TEST(GridScattering, CrossingCountBound) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-5, 5);
  for (std::size_t d = 1; d <= 5; ++d) {
    for (int k = 0; k < 2000; ++k) {
      Point a(d), b(d);
      double len2 = 0;
      for (std::size_t i = 0; i < d; ++i) {
        a[i] = u(rng);
        b[i] = u(rng);
        len2 += (a[i] - b[i]) * (a[i] - b[i]);
      }
      const double scale = 1.3;
      auto cells = segment_cells(a, b, scale);
      double bound = static_cast<double>(d) + 1 + std::ceil(std::sqrt(static_cast<double>(d) * len2) / scale);
      EXPECT_LE(static_cast<double>(cells.size()), bound);
      for (std::size_t i = 1; i < cells.size(); ++i) EXPECT_NE(cells[i], cells[i - 1]);
    }
  }
}

TEST(GridScattering, ReversalSymmetric) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int k = 0; k < 2000; ++k) {
    Point a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
    auto f = segment_cells(a, b, 0.7);
    auto r = segment_cells(b, a, 0.7);
    std::reverse(r.begin(), r.end());
    EXPECT_EQ(f, r);
  }
}

TEST(GridScattering, CellDiameterBelowDelta) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  const std::size_t d = 4;
  const double delta = 3, s = grid_scale(d, delta);
  for (int k = 0; k < 1000; ++k) {
    Point a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = s * u(rng);
      b[i] = s * u(rng);
    }
    ASSERT_EQ(grid_cell(a, s), grid_cell(b, s));
    double dist = 0;
    for (std::size_t i = 0; i < d; ++i) dist += (a[i] - b[i]) * (a[i] - b[i]);
    EXPECT_LT(std::sqrt(dist), delta);
  }
}

TEST(EuclideanLowerBound, Value) {
  EXPECT_DOUBLE_EQ(euclidean_weak_lower_bound(2, 1), 2.25);
}
