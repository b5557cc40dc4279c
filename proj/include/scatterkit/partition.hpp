#pragma once

// Partitions, sparse covers, and exact brute-force verifiers for the
// scattering, weak/strong sparse, and sparse-cover properties.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scatterkit/graph.hpp"

namespace scatterkit {

class NotAPartition : public GraphError {
 public:
  using GraphError::GraphError;
};

class PathExplosion : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Assignment of every vertex to exactly one cluster.
class Partition {
 public:
  Partition() = default;

  Partition(std::size_t n, std::vector<VertexSet> clusters, double delta,
            std::optional<std::vector<Vertex>> centers = std::nullopt)
      : clusters_(std::move(clusters)), centers_(std::move(centers)), delta_(delta) {
    assignment_.assign(n, kNoVertex);
    for (std::size_t i = 0; i < clusters_.size(); ++i) {
      auto& c = clusters_[i];
      if (c.empty()) throw NotAPartition("cluster " + std::to_string(i) + " is empty");
      std::sort(c.begin(), c.end());
      for (Vertex v : c) {
        if (v >= n) throw NotAPartition("vertex " + std::to_string(v) + " out of range");
        if (assignment_[v] != kNoVertex) {
          throw NotAPartition("vertex " + std::to_string(v) + " appears in clusters " +
                              std::to_string(assignment_[v]) + " and " + std::to_string(i));
        }
        assignment_[v] = static_cast<Vertex>(i);
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (assignment_[v] == kNoVertex) {
        throw NotAPartition("vertex " + std::to_string(v) + " is not covered");
      }
    }
    if (centers_) {
      if (centers_->size() != clusters_.size()) {
        throw NotAPartition("centers list length differs from cluster count");
      }
      for (std::size_t i = 0; i < clusters_.size(); ++i) {
        Vertex c = (*centers_)[i];
        if (c >= n || assignment_[c] != i) {
          throw NotAPartition("center " + std::to_string(c) + " is not in cluster " +
                              std::to_string(i));
        }
      }
    }
  }

  /// Builds a partition from a per-vertex label vector; clusters are
  /// numbered by their smallest member.
  static Partition from_labels(std::span<const std::size_t> labels, double delta) {
    std::map<std::size_t, std::size_t> index;
    std::vector<VertexSet> clusters;
    for (Vertex v = 0; v < labels.size(); ++v) {
      auto [it, fresh] = index.try_emplace(labels[v], clusters.size());
      if (fresh) clusters.emplace_back();
      clusters[it->second].push_back(v);
    }
    return Partition(labels.size(), std::move(clusters), delta);
  }

  std::size_t vertex_count() const { return assignment_.size(); }
  std::size_t size() const { return clusters_.size(); }
  const std::vector<VertexSet>& clusters() const { return clusters_; }
  const VertexSet& cluster(std::size_t i) const { return clusters_[i]; }
  Vertex cluster_of(Vertex v) const { return assignment_[v]; }
  const std::vector<Vertex>& assignment() const { return assignment_; }
  const std::optional<std::vector<Vertex>>& centers() const { return centers_; }
  double delta() const { return delta_; }

  void check_vertex_count(const WeightedGraph& g) const {
    if (assignment_.size() != g.size()) {
      throw NotAPartition("partition covers " + std::to_string(assignment_.size()) +
                          " vertices but the graph has " + std::to_string(g.size()));
    }
  }

 private:
  std::vector<Vertex> assignment_;
  std::vector<VertexSet> clusters_;
  std::optional<std::vector<Vertex>> centers_;
  double delta_ = 0.0;
};

/// A family of possibly overlapping clusters.
struct SparseCover {
  std::vector<VertexSet> clusters;
  double delta = 0.0;
  double sigma = 1.0;
};

// ---------------------------------------------------------------------------
// Reports

enum class WitnessKind { none, path, ball, cluster, vertex };

struct Witness {
  WitnessKind kind = WitnessKind::none;
  std::vector<Vertex> vertices;  // path vertices, or the offending cluster
  Vertex center = kNoVertex;     // ball center / uncovered vertex
  double radius = 0.0;
  std::size_t cluster = static_cast<std::size_t>(-1);
};

struct VerificationReport {
  bool ok = true;
  double sigma = 0.0;
  std::size_t worst_tau = 0;
  double worst_diameter = 0.0;
  Witness witness;
  std::string message;
};

enum class PathMode { canonical, all_paths };

inline constexpr std::size_t kDefaultPathCap = 10000;

inline std::pair<double, std::size_t> as_sigma_one(double sigma, std::size_t tau) {
  return {1.0, static_cast<std::size_t>(std::llround(sigma * static_cast<double>(tau)))};
}

// ---------------------------------------------------------------------------

namespace detail {

/// Counts distinct clusters along a path as vertices are pushed and popped.
class ClusterCounter {
 public:
  explicit ClusterCounter(std::size_t clusters) : count_(clusters, 0) {}
  void push(std::size_t c) {
    if (count_[c]++ == 0) ++distinct_;
  }
  void pop(std::size_t c) {
    if (--count_[c] == 0) --distinct_;
  }
  std::size_t distinct() const { return distinct_; }

 private:
  std::vector<std::size_t> count_;
  std::size_t distinct_ = 0;
};

struct DiameterCheck {
  double diameter = 0.0;
  bool within = true;
};

/// Weak or strong diameter of one cluster, exploring at most `bound` from
/// each member unless the bound is violated, in which case the exact value
/// is computed.
inline DiameterCheck cluster_diameter(const WeightedGraph& g, const VertexSet& cluster,
                                      double bound, bool strong) {
  VertexMask mask;
  if (strong) mask = make_mask(g.size(), cluster);
  const VertexMask* allowed = strong ? &mask : nullptr;
  DiameterCheck out;
  for (Vertex s : cluster) {
    Vertex src[1] = {s};
    auto dm = dijkstra(g, src, allowed, bound);
    for (Vertex t : cluster) {
      if (approx_le(dm.dist[t], bound)) {
        out.diameter = std::max(out.diameter, dm.dist[t]);
      } else {
        out.within = false;
      }
    }
    if (!out.within) break;
  }
  if (!out.within) {
    out.diameter = strong ? strong_diameter(g, cluster) : weak_diameter(g, cluster);
  }
  return out;
}

inline bool induces_connected(const WeightedGraph& g, const VertexSet& cluster) {
  return connected_components(g, cluster).size() == 1;
}

}  // namespace detail

struct ScatteringMeasure {
  std::size_t tau = 0;
  std::vector<Vertex> witness;
};

/// Worst number of clusters met by a checked shortest path of length at most
/// len_bound. Canonical mode checks the parent-pointer path for every ordered
/// pair; all_paths mode enumerates the whole shortest-path DAG.
inline ScatteringMeasure measure_scattering_tau(const WeightedGraph& g, const Partition& p,
                                                double len_bound, PathMode mode,
                                                std::size_t path_cap = kDefaultPathCap) {
  p.check_vertex_count(g);
  const std::size_t n = g.size();
  ScatteringMeasure best;
  if (n == 0) return best;
  best.tau = 1;
  best.witness = {0};
  detail::ClusterCounter counter(p.size());
  std::vector<Vertex> stack_path;

  for (Vertex s = 0; s < n; ++s) {
    Vertex src[1] = {s};
    auto dm = detail::dijkstra(g, src, nullptr, len_bound);
    auto in_range = [&](Vertex v) { return approx_le(dm.dist[v], len_bound); };

    if (mode == PathMode::canonical) {
      std::vector<std::vector<Vertex>> children(n);
      for (Vertex v = 0; v < n; ++v) {
        if (dm.parent[v] != kNoVertex && in_range(v)) children[dm.parent[v]].push_back(v);
      }
      // Iterative DFS over the canonical tree rooted at s.
      std::vector<std::pair<Vertex, std::size_t>> st{{s, 0}};
      counter.push(p.cluster_of(s));
      stack_path.assign(1, s);
      while (!st.empty()) {
        auto& [v, idx] = st.back();
        if (idx == 0 && counter.distinct() > best.tau) {
          best.tau = counter.distinct();
          best.witness = stack_path;
        }
        if (idx < children[v].size()) {
          Vertex c = children[v][idx++];
          counter.push(p.cluster_of(c));
          stack_path.push_back(c);
          st.emplace_back(c, 0);
        } else {
          counter.pop(p.cluster_of(v));
          stack_path.pop_back();
          st.pop_back();
        }
      }
      continue;
    }

    // all_paths: DFS over the shortest-path DAG; every prefix is a shortest path.
    std::vector<std::vector<Vertex>> succ(n);
    for (Vertex v = 0; v < n; ++v) {
      if (!in_range(v)) continue;
      for (const Arc& a : g.neighbors(v)) {
        if (in_range(a.to) && a.to != s && approx_eq(dm.dist[v] + a.w, dm.dist[a.to])) {
          succ[v].push_back(a.to);
        }
      }
    }
    std::vector<std::size_t> paths_to(n, 0);
    std::vector<char> on_path(n, 0);
    std::vector<std::pair<Vertex, std::size_t>> st{{s, 0}};
    counter.push(p.cluster_of(s));
    stack_path.assign(1, s);
    on_path[s] = 1;
    while (!st.empty()) {
      auto& [v, idx] = st.back();
      if (idx == 0) {
        if (++paths_to[v] > path_cap) {
          throw PathExplosion("more than " + std::to_string(path_cap) +
                              " shortest paths between " + std::to_string(s) + " and " +
                              std::to_string(v));
        }
        if (counter.distinct() > best.tau) {
          best.tau = counter.distinct();
          best.witness = stack_path;
        }
      }
      bool pushed = false;
      while (idx < succ[v].size()) {
        Vertex c = succ[v][idx++];
        if (on_path[c]) continue;
        on_path[c] = 1;
        counter.push(p.cluster_of(c));
        stack_path.push_back(c);
        st.emplace_back(c, 0);
        pushed = true;
        break;
      }
      if (!pushed) {
        Vertex done = st.back().first;
        on_path[done] = 0;
        counter.pop(p.cluster_of(done));
        stack_path.pop_back();
        st.pop_back();
      }
    }
  }
  return best;
}

inline VerificationReport verify_scattering(const WeightedGraph& g, const Partition& p,
                                            double sigma, std::size_t tau, double delta,
                                            PathMode mode = PathMode::canonical,
                                            std::size_t path_cap = kDefaultPathCap) {
  p.check_vertex_count(g);
  VerificationReport rep;
  rep.sigma = sigma;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.cluster(i);
    if (!detail::induces_connected(g, c)) {
      rep.ok = false;
      rep.witness = {WitnessKind::cluster, c, kNoVertex, 0.0, i};
      rep.message = "cluster " + std::to_string(i) + " is not connected";
      rep.worst_diameter = kInfinity;
      return rep;
    }
    auto dc = detail::cluster_diameter(g, c, delta, false);
    rep.worst_diameter = std::max(rep.worst_diameter, dc.diameter);
    if (!dc.within && rep.ok) {
      rep.ok = false;
      rep.witness = {WitnessKind::cluster, c, kNoVertex, 0.0, i};
      rep.message = "cluster " + std::to_string(i) + " has weak diameter " +
                    std::to_string(dc.diameter) + " > " + std::to_string(delta);
    }
  }
  auto m = measure_scattering_tau(g, p, delta / sigma, mode, path_cap);
  rep.worst_tau = m.tau;
  if (rep.ok) {
    rep.ok = m.tau <= tau;
    rep.witness = {WitnessKind::path, m.witness, kNoVertex, 0.0, static_cast<std::size_t>(-1)};
    rep.message = "a shortest path of length <= " + std::to_string(delta / sigma) + " meets " +
                  std::to_string(m.tau) + " clusters";
    if (rep.ok) rep.message.clear();
  }
  return rep;
}

namespace detail {

inline VerificationReport verify_sparse(const WeightedGraph& g, const Partition& p,
                                        double sigma, std::size_t tau, double delta,
                                        bool strong) {
  p.check_vertex_count(g);
  VerificationReport rep;
  rep.sigma = sigma;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& c = p.cluster(i);
    auto dc = cluster_diameter(g, c, delta, strong);
    rep.worst_diameter = std::max(rep.worst_diameter, dc.diameter);
    if (!dc.within && rep.ok) {
      rep.ok = false;
      rep.witness = {WitnessKind::cluster, c, kNoVertex, 0.0, i};
      rep.message = std::string("cluster ") + std::to_string(i) + " has " +
                    (strong ? "strong" : "weak") + " diameter " + std::to_string(dc.diameter) +
                    " > " + std::to_string(delta);
    }
  }
  // Intersection counts only grow with the radius, so the radius delta/sigma
  // dominates every smaller critical radius around the same center.
  const double radius = delta / sigma;
  std::vector<char> hit(p.size(), 0);
  Witness worst_ball;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto b = ball(g, v, radius);
    std::size_t count = 0;
    for (Vertex u : b) {
      auto c = p.cluster_of(u);
      if (!hit[c]) {
        hit[c] = 1;
        ++count;
      }
    }
    for (Vertex u : b) hit[p.cluster_of(u)] = 0;
    if (count > rep.worst_tau) {
      rep.worst_tau = count;
      worst_ball = {WitnessKind::ball, std::move(b), v, radius, static_cast<std::size_t>(-1)};
    }
  }
  if (rep.ok) {
    rep.ok = rep.worst_tau <= tau;
    rep.witness = std::move(worst_ball);
    if (!rep.ok) {
      rep.message = "ball(" + std::to_string(rep.witness.center) + ", " +
                    std::to_string(radius) + ") meets " + std::to_string(rep.worst_tau) +
                    " clusters";
    }
  }
  return rep;
}

}  // namespace detail

inline VerificationReport verify_weak_sparse(const WeightedGraph& g, const Partition& p,
                                             double sigma, std::size_t tau, double delta) {
  return detail::verify_sparse(g, p, sigma, tau, delta, false);
}

inline VerificationReport verify_strong_sparse(const WeightedGraph& g, const Partition& p,
                                               double sigma, std::size_t tau, double delta) {
  return detail::verify_sparse(g, p, sigma, tau, delta, true);
}

inline VerificationReport verify_cover(const WeightedGraph& g, const SparseCover& cover,
                                       double sigma, std::size_t tau, double delta,
                                       bool strong = false) {
  VerificationReport rep;
  rep.sigma = sigma;
  const std::size_t n = g.size();
  std::vector<VertexMask> masks;
  masks.reserve(cover.clusters.size());
  std::vector<std::size_t> membership(n, 0);
  for (std::size_t i = 0; i < cover.clusters.size(); ++i) {
    const auto& c = cover.clusters[i];
    if (c.empty()) {
      rep.ok = false;
      rep.message = "cluster " + std::to_string(i) + " is empty";
      rep.witness = {WitnessKind::cluster, {}, kNoVertex, 0.0, i};
      return rep;
    }
    masks.push_back(make_mask(n, c));
    for (Vertex v : c) ++membership[v];
    auto dc = detail::cluster_diameter(g, c, delta, strong);
    rep.worst_diameter = std::max(rep.worst_diameter, dc.diameter);
    if (!dc.within && rep.ok) {
      rep.ok = false;
      rep.witness = {WitnessKind::cluster, c, kNoVertex, 0.0, i};
      rep.message = "cluster " + std::to_string(i) + " has diameter " +
                    std::to_string(dc.diameter) + " > " + std::to_string(delta);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (membership[v] == 0 && rep.ok) {
      rep.ok = false;
      rep.witness = {WitnessKind::vertex, {v}, v, 0.0, static_cast<std::size_t>(-1)};
      rep.message = "vertex " + std::to_string(v) + " is not covered";
    }
  }
  const double radius = delta / sigma;
  for (Vertex v = 0; v < n; ++v) {
    rep.worst_tau = std::max(rep.worst_tau, membership[v]);
    if (membership[v] > tau && rep.ok) {
      rep.ok = false;
      rep.witness = {WitnessKind::vertex, {v}, v, 0.0, static_cast<std::size_t>(-1)};
      rep.message = "vertex " + std::to_string(v) + " lies in " +
                    std::to_string(membership[v]) + " clusters";
    }
    auto b = ball(g, v, radius);
    bool padded = std::any_of(masks.begin(), masks.end(), [&](const VertexMask& m) {
      return std::all_of(b.begin(), b.end(), [&](Vertex u) { return m[u] != 0; });
    });
    if (!padded && rep.ok) {
      rep.ok = false;
      rep.witness = {WitnessKind::ball, b, v, radius, static_cast<std::size_t>(-1)};
      rep.message = "no cluster contains ball(" + std::to_string(v) + ", " +
                    std::to_string(radius) + ")";
    }
  }
  return rep;
}

}  // namespace scatterkit
