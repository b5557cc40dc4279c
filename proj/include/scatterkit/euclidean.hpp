#pragma once

// Axis-aligned grid partition of R^d with cells of side delta/sqrt(d), and
// exact enumeration of the cells a segment passes through.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace scatterkit {

using Point = std::vector<double>;
using Cell = std::vector<std::int64_t>;

inline double grid_scale(std::size_t dim, double delta) {
  return delta / std::sqrt(static_cast<double>(dim));
}

/// Half-open cells: x lies in cell a iff scale*a_i <= x_i < scale*(a_i + 1).
inline Cell grid_cell(const Point& x, double scale) {
  Cell c(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw std::invalid_argument("non-finite coordinate");
    c[i] = static_cast<std::int64_t>(std::floor(x[i] / scale));
  }
  return c;
}

/// Cells met by the closed segment [a, b], in order from a. Crossing times
/// are grouped so a corner hit advances every crossed coordinate at once.
inline std::vector<Cell> segment_cells(const Point& a, const Point& b, double scale) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  const std::size_t d = a.size();
  std::vector<double> times;
  for (std::size_t i = 0; i < d; ++i) {
    double lo = std::min(a[i], b[i]) / scale, hi = std::max(a[i], b[i]) / scale;
    if (lo == hi) continue;
    for (double k = std::floor(lo) + 1; k <= hi; k += 1) {
      double t = (k * scale - a[i]) / (b[i] - a[i]);
      if (t > 0 && t < 1) times.push_back(t);
    }
  }
  std::sort(times.begin(), times.end());
  std::vector<double> groups;
  for (double t : times) {
    if (groups.empty() || t - groups.back() > 1e-12) groups.push_back(t);
  }
  auto at = [&](double t) {
    Point p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = a[i] + t * (b[i] - a[i]);
    return grid_cell(p, scale);
  };
  std::vector<Cell> cells{grid_cell(a, scale)};
  auto push = [&](Cell c) {
    if (c != cells.back()) cells.push_back(std::move(c));
  };
  double prev = 0;
  for (double t : groups) {
    push(at((prev + t) / 2));
    prev = t;
  }
  push(at((prev + 1) / 2));
  push(grid_cell(b, scale));
  return cells;
}

/// The tight instance: a = -eps*(1, 2, ..., d), b = (eps, 1+eps, ..., 1+eps),
/// at unit scale; it meets exactly 2d cells.
inline std::pair<Point, Point> remark_fixture(std::size_t d, double eps = 1e-3) {
  Point a(d), b(d, 1 + eps);
  for (std::size_t i = 0; i < d; ++i) a[i] = -eps * static_cast<double>(i + 1);
  b[0] = eps;
  return {a, b};
}

struct GridScatteringReport {
  std::size_t trials = 0;
  std::size_t max_cells = 0;
  std::size_t violations = 0;
  bool ok = true;
};

/// Random segments of length at most delta (uniform direction, uniform
/// length, uniform start in a box); every segment must meet at most 2d cells.
inline GridScatteringReport verify_grid_scattering(std::size_t d, double delta, std::size_t trials,
                                                   std::uint64_t seed, bool include_fixture = true) {
  GridScatteringReport rep;
  const double scale = grid_scale(d, delta);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto record = [&](std::size_t cells) {
    ++rep.trials;
    rep.max_cells = std::max(rep.max_cells, cells);
    if (cells > 2 * d) {
      ++rep.violations;
      rep.ok = false;
    }
  };
  if (include_fixture) {
    auto [a, b] = remark_fixture(d);
    for (auto& x : a) x *= scale;
    for (auto& x : b) x *= scale;
    record(segment_cells(a, b, scale).size());
  }
  for (std::size_t k = 0; k < trials; ++k) {
    Point a(d), b(d), dir(d);
    double norm = 0;
    for (auto& x : dir) {
      x = gauss(rng);
      norm += x * x;
    }
    norm = std::sqrt(norm);
    const double len = delta * unit(rng);
    for (std::size_t i = 0; i < d; ++i) {
      a[i] = scale * 8 * (unit(rng) - 0.5);
      b[i] = a[i] + len * dir[i] / norm;
    }
    record(segment_cells(a, b, scale).size());
  }
  return rep;
}

/// Value of the weak sparse lower bound (1 + 1/(2 sigma))^d.
inline double euclidean_weak_lower_bound(std::size_t d, double sigma) {
  return std::pow(1 + 1 / (2 * sigma), static_cast<double>(d));
}

}  // namespace scatterkit
