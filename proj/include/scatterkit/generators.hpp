#pragma once

// Instance generators (deterministic and seeded) and the lower-bound
// measurement experiments on full trees and hypercubes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

/// Root has d+1 children, every other internal vertex has d; leaves at
/// `depth`. With `binary_root` the root has d children instead (a full
/// d-ary tree).
inline WeightedGraph gen_full_ary_tree(std::size_t d, std::size_t depth, bool binary_root = false) {
  std::vector<Edge> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (std::size_t lvl = 0; lvl < depth; ++lvl) {
    std::vector<Vertex> grown;
    for (Vertex v : frontier) {
      std::size_t kids = (v == 0 && !binary_root) ? d + 1 : d;
      for (std::size_t c = 0; c < kids; ++c) {
        edges.push_back({v, next, 1.0});
        grown.push_back(next++);
      }
    }
    frontier = std::move(grown);
  }
  return WeightedGraph(next, std::move(edges));
}

inline std::size_t full_ary_tree_size(std::size_t d, std::size_t depth) {
  if (depth == 0) return 1;
  if (d == 1) return 1 + 2 * depth;
  std::size_t p = 1;
  for (std::size_t i = 0; i < depth; ++i) p *= d;
  return 1 + (d + 1) * (p - 1) / (d - 1);
}

inline WeightedGraph gen_hypercube(std::size_t d) {
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t b = 0; b < d; ++b) {
      Vertex u = v ^ (Vertex{1} << b);
      if (v < u) edges.push_back({v, u, 1.0});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

/// w x h grid, vertex (x, y) has id y*w + x.
inline WeightedGraph gen_grid(std::size_t w, std::size_t h) {
  std::vector<Edge> edges;
  auto id = [&](std::size_t x, std::size_t y) { return static_cast<Vertex>(y * w + x); };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) edges.push_back({id(x, y), id(x + 1, y), 1.0});
      if (y + 1 < h) edges.push_back({id(x, y), id(x, y + 1), 1.0});
    }
  }
  return WeightedGraph(w * h, std::move(edges));
}

inline WeightedGraph gen_path(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v, w});
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph gen_cycle(std::size_t n, double w = 1.0) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v, w});
  if (n >= 3) edges.push_back({static_cast<Vertex>(n - 1), 0, w});
  return WeightedGraph(n, std::move(edges));
}

/// Random recursive tree with integer weights in [1, 10].
inline WeightedGraph gen_random_tree(std::size_t n, std::uint64_t seed, bool unit = false) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 10);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    Vertex p = pick(rng);
    double w = unit ? 1.0 : weight(rng);
    edges.push_back({p, v, w});
  }
  return WeightedGraph(n, std::move(edges));
}

/// G(n, p) with unit weights, resampled until connected.
inline WeightedGraph gen_random_graph(std::size_t n, double p, std::uint64_t seed,
                                      std::size_t max_tries = 1000) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (std::size_t t = 0; t < max_tries; ++t) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v, 1.0});
      }
    }
    WeightedGraph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw DisconnectedGraph("no connected G(n, p) sample in " + std::to_string(max_tries) + " tries");
}

/// Random k-tree: a (k+1)-clique grown by attaching each new vertex to a
/// uniformly chosen existing k-clique. Unit weights.
inline WeightedGraph gen_random_chordal(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  const std::size_t base = std::min(n, k + 1);
  for (Vertex u = 0; u < base; ++u) {
    for (Vertex v = u + 1; v < base; ++v) edges.push_back({u, v, 1.0});
  }
  std::vector<std::vector<Vertex>> cliques;
  if (n > base && k > 0) {
    for (Vertex skip = 0; skip < base; ++skip) {
      std::vector<Vertex> c;
      for (Vertex v = 0; v < base; ++v) {
        if (v != skip) c.push_back(v);
      }
      cliques.push_back(std::move(c));
    }
  }
  for (auto v = static_cast<Vertex>(base); v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, cliques.size() - 1);
    auto q = cliques[pick(rng)];
    for (Vertex u : q) edges.push_back({u, v, 1.0});
    for (std::size_t i = 0; i < q.size(); ++i) {
      auto c = q;
      c[i] = v;
      cliques.push_back(std::move(c));
    }
  }
  return WeightedGraph(n, std::move(edges));
}

/// Random cactus: pendant paths and cycles hung on random existing vertices,
/// integer weights in [1, 5].
inline WeightedGraph gen_random_cactus(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 5);
  std::bernoulli_distribution make_cycle(0.6);
  std::vector<Edge> edges;
  Vertex next = 1;
  while (next < n) {
    std::uniform_int_distribution<Vertex> pick(0, next - 1);
    Vertex u = pick(rng);
    const std::size_t room = n - next;
    if (room >= 2 && make_cycle(rng)) {
      std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(room, 7));
      std::size_t m = len(rng);
      Vertex prev = u;
      for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({prev, next, static_cast<double>(weight(rng))});
        prev = next++;
      }
      edges.push_back({prev, u, static_cast<double>(weight(rng))});
    } else {
      std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(room, 3));
      std::size_t m = len(rng);
      Vertex prev = u;
      for (std::size_t i = 0; i < m; ++i) {
        edges.push_back({prev, next, static_cast<double>(weight(rng))});
        prev = next++;
      }
    }
  }
  return WeightedGraph(std::max<std::size_t>(n, 1), std::move(edges));
}

namespace detail {

struct P2 {
  double x, y;
};

inline double orient(P2 a, P2 b, P2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); }

inline bool segments_cross(P2 a, P2 b, P2 c, P2 d) {
  double o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

}  // namespace detail

/// Greedy triangulation of uniform random points in the unit square: edges
/// are added shortest first unless they cross an earlier edge. Euclidean
/// weights.
inline WeightedGraph gen_random_planar(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<detail::P2> pts(n);
  for (auto& p : pts) p = {unit(rng), unit(rng)};
  struct Cand {
    double len;
    Vertex u, v;
  };
  std::vector<Cand> cand;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      cand.push_back({std::hypot(pts[u].x - pts[v].x, pts[u].y - pts[v].y), u, v});
    }
  }
  std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.len, a.u, a.v) < std::tie(b.len, b.u, b.v);
  });
  std::vector<Edge> edges;
  for (const auto& c : cand) {
    bool ok = std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
      if (e.u == c.u || e.u == c.v || e.v == c.u || e.v == c.v) return false;
      return detail::segments_cross(pts[c.u], pts[c.v], pts[e.u], pts[e.v]);
    });
    if (ok) edges.push_back({c.u, c.v, c.len});
  }
  return WeightedGraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Lower-bound experiments

struct TreeLbReport {
  std::size_t d = 0, depth = 0, n = 0;
  double delta = 0;
  std::size_t worst_ball = 0;    // clusters met by the worst radius-1 ball
  std::size_t target = 0;        // d + 1
  double strong_diameter = 0;    // of the measured partition
};

/// Worst number of clusters met by a radius-1 ball, over all vertices.
inline std::size_t worst_unit_ball(const WeightedGraph& g, const Partition& p) {
  std::size_t worst = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    std::set<Vertex> seen;
    for (Vertex u : ball(g, v, 1.0)) seen.insert(p.cluster_of(u));
    worst = std::max(worst, seen.size());
  }
  return worst;
}

inline TreeLbReport experiment_tree_lb(std::size_t d, std::size_t depth,
                                       const std::function<Partition(const WeightedGraph&, double)>& scheme) {
  TreeLbReport rep;
  rep.d = d;
  rep.depth = depth;
  auto g = gen_full_ary_tree(d, depth);
  rep.n = g.size();
  rep.delta = 2.0 * static_cast<double>(depth) - 1;
  rep.target = d + 1;
  auto p = scheme(g, std::max(rep.delta, 1.0));
  rep.worst_ball = worst_unit_ball(g, p);
  for (const auto& c : p.clusters()) rep.strong_diameter = std::max(rep.strong_diameter, strong_diameter(g, c));
  return rep;
}

struct ExhaustiveLbReport {
  std::size_t partitions_checked = 0;  // connected, strong diameter < 2 depth
  std::size_t min_worst_ball = 0;      // over those partitions
  bool holds = false;                  // every such partition has a ball meeting >= d+1 clusters
};

/// Enumerates all set partitions of the (d, depth) full tree by restricted
/// growth strings (at most 12 vertices).
inline ExhaustiveLbReport exhaustive_tree_lb(std::size_t d, std::size_t depth) {
  auto g = gen_full_ary_tree(d, depth);
  const std::size_t n = g.size();
  if (n > 12) throw std::invalid_argument("exhaustive search is capped at 12 vertices");
  DistanceMatrix dist(g);
  const double limit = 2.0 * static_cast<double>(depth);
  ExhaustiveLbReport rep;
  rep.min_worst_ball = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> label(n, 0);
  std::vector<std::vector<Vertex>> balls(n);
  for (Vertex v = 0; v < n; ++v) balls[v] = ball(g, v, 1.0);

  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t used) {
    if (i == n) {
      std::vector<VertexSet> clusters(used);
      for (Vertex v = 0; v < n; ++v) clusters[label[v]].push_back(v);
      for (const auto& c : clusters) {
        if (connected_components(g, c).size() != 1) return;
        // In a tree a connected cluster's strong and weak diameters agree.
        for (Vertex a : c) {
          for (Vertex b : c) {
            if (!approx_lt(dist(a, b), limit)) return;
          }
        }
      }
      ++rep.partitions_checked;
      std::size_t worst = 0;
      for (Vertex v = 0; v < n; ++v) {
        std::set<std::size_t> seen;
        for (Vertex u : balls[v]) seen.insert(label[u]);
        worst = std::max(worst, seen.size());
      }
      rep.min_worst_ball = std::min(rep.min_worst_ball, worst);
      return;
    }
    for (std::size_t c = 0; c <= used; ++c) {
      label[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  rep.holds = rep.partitions_checked > 0 && rep.min_worst_ball >= d + 1;
  return rep;
}

/// Hypercube partition into subcubes: vertices sharing all bits above the
/// lowest `free_dims` bits form a cluster (diameter free_dims).
inline Partition hypercube_subcube_partition(std::size_t d, std::size_t free_dims) {
  const std::size_t n = std::size_t{1} << d;
  std::vector<std::size_t> label(n);
  for (std::size_t v = 0; v < n; ++v) label[v] = v >> free_dims;
  return Partition::from_labels(label, static_cast<double>(free_dims));
}

struct SuperScatteringReport {
  std::size_t trials = 0;
  std::size_t max_separated = 0;
  double mean_separated = 0;
};

/// Random shortest paths of length k (k distinct bit flips from a random
/// start); counts consecutive pairs lying in different clusters.
inline SuperScatteringReport experiment_supersc_lb(std::size_t d, std::size_t k, const Partition& p,
                                                   std::size_t trials, std::uint64_t seed) {
  if (k > d) throw std::invalid_argument("path length exceeds dimension");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> start(0, (std::uint64_t{1} << d) - 1);
  std::vector<std::size_t> bits(d);
  for (std::size_t i = 0; i < d; ++i) bits[i] = i;
  SuperScatteringReport rep;
  double total = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = static_cast<Vertex>(start(rng));
    std::shuffle(bits.begin(), bits.end(), rng);
    std::size_t sep = 0;
    for (std::size_t j = 0; j < k; ++j) {
      Vertex y = x ^ (Vertex{1} << bits[j]);
      if (p.cluster_of(x) != p.cluster_of(y)) ++sep;
      x = y;
    }
    rep.max_separated = std::max(rep.max_separated, sep);
    total += static_cast<double>(sep);
  }
  rep.trials = trials;
  rep.mean_separated = trials ? total / static_cast<double>(trials) : 0;
  return rep;
}

}  // namespace scatterkit
