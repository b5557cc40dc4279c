#pragma once

// Randomized strong sparse partitions: exponential shifts on all vertices for
// general graphs, and betailed shifts on a net with Moser-Tardos resampling
// for graphs of bounded doubling dimension.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/mpx.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class ResampleLimitExceeded : public GraphError {
 public:
  using GraphError::GraphError;
};

using Rng = std::mt19937_64;

class ExponentialSampler {
 public:
  ExponentialSampler(double lambda, std::uint64_t seed) : rng_(seed), dist_(1.0 / lambda) {
    if (!(lambda > 0)) throw std::invalid_argument("exponential mean must be positive");
  }
  double operator()() { return dist_(rng_); }
  Rng& rng() { return rng_; }

 private:
  Rng rng_;
  std::exponential_distribution<double> dist_;
};

/// Exp(lambda) with all mass above lambda_top collapsed onto lambda_top.
class BetailedSampler {
 public:
  struct Draw {
    double raw;
    double value;
  };

  BetailedSampler(double lambda, double lambda_top, std::uint64_t seed)
      : exp_(lambda, seed), top_(lambda_top) {
    if (lambda_top < 0) throw std::invalid_argument("lambda_top must be non-negative");
  }

  Draw draw() {
    double raw = exp_();
    return {raw, std::min(raw, top_)};
  }
  double operator()() { return draw().value; }

 private:
  ExponentialSampler exp_;
  double top_;
};

inline double sample_betailed(BetailedSampler& s) { return s(); }

/// Greedy net in id order: pairwise distances > spacing, every vertex within
/// spacing of some net point.
inline VertexSet greedy_net(const WeightedGraph& g, double spacing) {
  std::vector<double> to_net(g.size(), kInfinity);
  VertexSet net;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (approx_le(to_net[v], spacing)) continue;
    net.push_back(v);
    Vertex src[1] = {v};
    auto dm = detail::dijkstra(g, src, nullptr, spacing);
    for (Vertex u = 0; u < g.size(); ++u) to_net[u] = std::min(to_net[u], dm.dist[u]);
  }
  return net;
}

struct SchemeResult {
  Partition partition;
  ShiftAssignment shifts;
  std::size_t attempts = 0;  // whole-vector samples, or Moser-Tardos resamples
};

/// Exp(delta / (4 ln n)) shifts on every vertex, resampled until all shifts
/// are at most delta/2, so every cluster has strong diameter <= delta.
inline SchemeResult general_strong_partition(const WeightedGraph& g, double delta,
                                             std::uint64_t seed,
                                             std::size_t max_attempts = 100) {
  const std::size_t n = g.size();
  if (n < 2) throw std::invalid_argument("general_strong_partition needs n >= 2");
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  ExponentialSampler exp(delta / (4.0 * std::log(static_cast<double>(n))), seed);
  for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
    ShiftAssignment s;
    double top = 0;
    for (Vertex v = 0; v < n; ++v) {
      s.add(v, exp());
      top = std::max(top, s.shifts.back());
    }
    if (top > delta / 2) continue;
    auto p = mpx_cluster(g, s, delta);
    return {std::move(p), std::move(s), attempt};
  }
  throw ResampleLimitExceeded("no shift vector with max <= delta/2 in " +
                              std::to_string(max_attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Doubling graphs

struct DoublingParams {
  double c_top = 4.0;
  std::size_t max_resamples = 0;  // 0 means 10 * |epsilon-net|
};

/// Constants of the local-lemma events for a given doubling dimension.
struct DoublingConstants {
  double ddim;
  double c_top;
  double s;
  std::vector<double> alphas;

  DoublingConstants(double dd, double ct) : ddim(dd), c_top(ct) {
    s = std::ceil(4.0 * std::log(4.0 * std::exp(1.0) * ddim * ddim *
                                 std::pow(24.0 * c_top * ddim, ddim)));
    const int D = std::max(1, static_cast<int>(std::lround(ddim)));
    for (int k = 0; k <= D * (D - 1); ++k) alphas.push_back(1.0 + static_cast<double>(k) / D);
  }

  double m_alpha(double alpha) const { return 2.0 * s * std::pow(2.0, ddim / alpha); }
  double r_alpha(double alpha, double delta) const { return std::log(2.0) / alpha * delta; }
};

struct DoublingResult : SchemeResult {
  std::size_t resamples = 0;
  VertexSet net;
  VertexSet event_net;
};

inline DoublingResult doubling_strong_partition(const WeightedGraph& g, double delta, double ddim,
                                                std::uint64_t seed, DoublingParams params = {}) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (ddim < 1) throw std::invalid_argument("ddim must be at least 1");
  const DoublingConstants k(ddim, params.c_top);
  const double eps = delta / (4.0 * ddim);

  DoublingResult out;
  out.net = greedy_net(g, delta);
  out.event_net = greedy_net(g, eps);
  const auto& net = out.net;
  const auto& hat = out.event_net;

  std::vector<std::size_t> net_index(g.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < net.size(); ++i) net_index[net[i]] = i;

  // Net points near each event point, and event points whose inputs overlap.
  std::vector<std::vector<std::pair<std::size_t, double>>> near(hat.size());
  std::vector<std::vector<std::size_t>> gamma(hat.size());
  for (std::size_t j = 0; j < hat.size(); ++j) {
    auto dm = shortest_paths(g, hat[j]);
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (approx_le(dm.dist[net[i]], (k.c_top + 2) * delta)) near[j].emplace_back(i, dm.dist[net[i]]);
    }
    for (std::size_t l = 0; l < hat.size(); ++l) {
      if (approx_le(dm.dist[hat[l]], 3 * k.c_top * delta)) gamma[j].push_back(l);
    }
  }

  BetailedSampler sampler(delta / ddim, k.c_top * delta, seed);
  std::vector<double> shift(net.size());
  for (auto& x : shift) x = sampler();

  auto violated = [&](std::size_t j) {
    std::vector<double> f;
    f.reserve(near[j].size());
    for (auto [i, d] : near[j]) f.push_back(shift[i] - d);
    std::sort(f.begin(), f.end(), std::greater<>());
    for (double a : k.alphas) {
      auto m = static_cast<std::size_t>(std::floor(k.m_alpha(a)));
      if (f.size() >= m + 1 && approx_le(f[0] - f[m], k.r_alpha(a, delta))) return true;
    }
    return false;
  };

  std::vector<char> bad(hat.size(), 0);
  for (std::size_t j = 0; j < hat.size(); ++j) bad[j] = violated(j);
  const std::size_t limit = params.max_resamples ? params.max_resamples : 10 * hat.size();
  while (true) {
    auto it = std::find(bad.begin(), bad.end(), 1);
    if (it == bad.end()) break;
    if (out.resamples == limit) {
      throw ResampleLimitExceeded("Moser-Tardos loop exceeded " + std::to_string(limit) +
                                  " resamples");
    }
    ++out.resamples;
    auto j = static_cast<std::size_t>(it - bad.begin());
    for (auto [i, d] : near[j]) shift[i] = sampler();
    for (auto l : gamma[j]) bad[l] = violated(l);
  }

  for (std::size_t i = 0; i < net.size(); ++i) out.shifts.add(net[i], shift[i]);
  out.partition = mpx_cluster(g, out.shifts, delta);
  out.attempts = out.resamples;
  return out;
}

/// Heuristic doubling-dimension estimate: the largest log2 count of a greedy
/// r/2-net inside any ball of radius r, over radii at the distinct edge-weight
/// scales. Not a certified bound.
inline double estimate_ddim(const WeightedGraph& g, std::size_t scales = 6) {
  if (g.size() <= 1) return 1.0;
  auto dm0 = shortest_paths(g, 0);
  double far = 0;
  for (double d : dm0.dist) far = std::max(far, d);
  double r = std::max(g.min_edge_weight(), 1e-9) * 2;
  double best = 1.0;
  for (std::size_t k = 0; k < scales && r <= 2 * far; ++k, r *= 2) {
    for (Vertex v = 0; v < g.size(); ++v) {
      auto b = ball(g, v, r);
      if (b.size() < 2) continue;
      auto sub = induced_subgraph(g, b);
      std::vector<double> to_net(b.size(), kInfinity);
      std::size_t count = 0;
      for (Vertex u = 0; u < b.size(); ++u) {
        if (approx_le(to_net[u], r / 2)) continue;
        ++count;
        auto du = shortest_paths(g, sub.to_parent[u]);
        for (Vertex x = 0; x < b.size(); ++x) to_net[x] = std::min(to_net[x], du.dist[sub.to_parent[x]]);
      }
      best = std::max(best, std::log2(static_cast<double>(count)));
    }
  }
  return best;
}

}  // namespace scatterkit
