#pragma once

// Chordal graph recognition via maximum cardinality search, the normalized
// clique tree it induces, and a (2,3)-scattering partition driven by it.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class NotChordal : public GraphError {
 public:
  NotChordal(const std::string& what, std::vector<Vertex> cycle)
      : GraphError(what), cycle_(std::move(cycle)) {}
  /// A chordless cycle of length >= 4, when one was found.
  const std::vector<Vertex>& cycle() const { return cycle_; }

 private:
  std::vector<Vertex> cycle_;
};

/// Maximum cardinality search from vertex 0, ties to the smallest id.
inline std::vector<Vertex> mcs_order(const WeightedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex pick = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (!visited[v] && (pick == kNoVertex || weight[v] > weight[pick])) pick = v;
    }
    visited[pick] = 1;
    order.push_back(pick);
    for (const Arc& a : g.neighbors(pick)) {
      if (!visited[a.to]) ++weight[a.to];
    }
  }
  return order;
}

/// Rooted clique tree with one bag per vertex: bag(v) = {v} plus its
/// neighbours visited earlier. Bag order follows the search order.
struct CliqueTree {
  std::vector<Vertex> order;            // introduction order, order[0] is the root vertex
  std::vector<std::size_t> position;    // vertex -> index in order
  std::vector<VertexSet> bags;          // bags[v], sorted, introduced by v
  std::vector<Vertex> parent;           // parent[v] = vertex whose bag is the parent bag

  Vertex root() const { return order.front(); }
  const VertexSet& bag(Vertex v) const { return bags[v]; }
};

namespace detail {

inline std::vector<Vertex> chordless_cycle(const WeightedGraph& g, Vertex v, Vertex x, Vertex y) {
  VertexMask allowed(g.size(), 1);
  allowed[v] = 0;
  for (const Arc& a : g.neighbors(v)) allowed[a.to] = 0;
  allowed[x] = allowed[y] = 1;
  auto dm = shortest_paths_within(g, x, allowed);
  if (!dm.reachable(y)) return {};
  // Unweighted graphs: a shortest path is induced, so v plus the path is chordless.
  std::vector<Vertex> cycle{v};
  auto path = path_from_parents(g, dm, y);
  cycle.insert(cycle.end(), path.vertices.begin(), path.vertices.end());
  return cycle;
}

}  // namespace detail

inline CliqueTree build_clique_tree(const WeightedGraph& g) {
  const std::size_t n = g.size();
  CliqueTree t;
  if (n == 0) return t;
  t.order = mcs_order(g);
  t.position.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) t.position[t.order[i]] = i;
  t.bags.assign(n, {});
  t.parent.assign(n, kNoVertex);
  for (Vertex v : t.order) {
    VertexSet earlier;
    for (const Arc& a : g.neighbors(v)) {
      if (t.position[a.to] < t.position[v]) earlier.push_back(a.to);
    }
    for (std::size_t i = 0; i < earlier.size(); ++i) {
      for (std::size_t j = i + 1; j < earlier.size(); ++j) {
        Vertex x = earlier[i], y = earlier[j];
        if (!g.has_edge(x, y)) {
          throw NotChordal("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                               " are non-adjacent neighbours of " + std::to_string(v) +
                               " preceding it in search order",
                           detail::chordless_cycle(g, v, x, y));
        }
      }
    }
    Vertex latest = kNoVertex;
    for (Vertex u : earlier) {
      if (latest == kNoVertex || t.position[u] > t.position[latest]) latest = u;
    }
    t.parent[v] = latest;
    earlier.push_back(v);
    std::sort(earlier.begin(), earlier.end());
    t.bags[v] = std::move(earlier);
  }
  return t;
}

inline bool is_chordal(const WeightedGraph& g) {
  try {
    build_clique_tree(g);
    return true;
  } catch (const NotChordal&) {
    return false;
  }
}

struct ChordalPartition {
  Partition partition;
  std::vector<std::size_t> label;  // delta_v, the distance to the cluster center
  std::size_t r = 0;
};

/// Clusters grow along the clique tree; a vertex follows the smallest-label
/// vertex of its bag unless that label has reached r = floor(delta/2).
inline ChordalPartition chordal_scattering(const WeightedGraph& g, long delta) {
  if (!g.is_unit_weighted() && g.edge_count() > 0) {
    throw std::invalid_argument("chordal partitions need an unweighted graph");
  }
  const std::size_t n = g.size();
  auto tree = build_clique_tree(g);
  ChordalPartition out;
  if (delta < 3) {
    std::vector<VertexSet> singles;
    std::vector<Vertex> centers;
    for (Vertex v = 0; v < n; ++v) {
      singles.push_back({v});
      centers.push_back(v);
    }
    out.partition = Partition(n, std::move(singles), static_cast<double>(delta), std::move(centers));
    out.label.assign(n, 0);
    return out;
  }
  out.r = static_cast<std::size_t>(delta / 2);
  const std::size_t r = out.r;
  out.label.assign(n, 0);
  std::vector<Vertex> center(n, kNoVertex);
  std::map<Vertex, std::vector<double>> from_center;
  for (Vertex v : tree.order) {
    Vertex u = kNoVertex;
    for (Vertex x : tree.bag(v)) {
      if (x == v) continue;
      if (u == kNoVertex || out.label[x] < out.label[u]) u = x;
    }
    if (u != kNoVertex && out.label[u] < r) {
      center[v] = center[u];
      auto it = from_center.find(center[v]);
      if (it == from_center.end()) {
        it = from_center.emplace(center[v], shortest_paths(g, center[v]).dist).first;
      }
      out.label[v] = static_cast<std::size_t>(std::lround(it->second[v]));
    } else {
      center[v] = v;
      out.label[v] = 0;
    }
  }
  std::map<Vertex, std::size_t> index;
  std::vector<VertexSet> clusters;
  std::vector<Vertex> centers;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, fresh] = index.try_emplace(center[v], clusters.size());
    if (fresh) {
      clusters.emplace_back();
      centers.push_back(center[v]);
    }
    clusters[it->second].push_back(v);
  }
  out.partition = Partition(n, std::move(clusters), static_cast<double>(delta), std::move(centers));
  return out;
}

inline Partition chordal_scattering_partition(const WeightedGraph& g, long delta) {
  return chordal_scattering(g, delta).partition;
}

/// Inside every bag, all vertices with label below r share one cluster.
inline bool check_chordal_bag_invariant(const WeightedGraph& g, const ChordalPartition& cp) {
  if (cp.r == 0) return true;
  auto tree = build_clique_tree(g);
  for (Vertex v = 0; v < g.size(); ++v) {
    Vertex seen = kNoVertex;
    for (Vertex x : tree.bag(v)) {
      if (cp.label[x] >= cp.r) continue;
      Vertex c = cp.partition.cluster_of(x);
      if (seen == kNoVertex) seen = c;
      else if (seen != c) return false;
    }
  }
  return true;
}

}  // namespace scatterkit
