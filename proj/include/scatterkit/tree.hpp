#pragma once

// Ring-based partitions of weighted trees: a (2,3)-scattering partition with
// rings of width delta/2 and a (4,3)-weak sparse partition with rings of
// width delta/4.

#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class NotATree : public GraphError {
 public:
  using GraphError::GraphError;
};

class RootedTree {
 public:
  explicit RootedTree(WeightedGraph graph, Vertex root = 0) : g_(std::move(graph)), root_(root) {
    const WeightedGraph& g = g_;
    if (g.size() == 0) throw NotATree("empty graph");
    if (root >= g.size()) throw std::out_of_range("root out of range");
    if (g.edge_count() + 1 != g.size() || !g.is_connected()) {
      throw NotATree("graph with " + std::to_string(g.size()) + " vertices and " +
                     std::to_string(g.edge_count()) + " edges is not a tree");
    }
    parent_.assign(g.size(), kNoVertex);
    depth_.assign(g.size(), 0.0);
    order_.reserve(g.size());
    order_.push_back(root);
    std::vector<char> seen(g.size(), 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      Vertex v = order_[i];
      for (const Arc& a : g.neighbors(v)) {
        if (seen[a.to]) continue;
        seen[a.to] = 1;
        parent_[a.to] = v;
        depth_[a.to] = depth_[v] + a.w;
        order_.push_back(a.to);
      }
    }
  }

  const WeightedGraph& graph() const { return g_; }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  double depth(Vertex v) const { return depth_[v]; }
  /// Vertices in BFS order from the root; parents precede children.
  const std::vector<Vertex>& order() const { return order_; }

 private:
  WeightedGraph g_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<double> depth_;
  std::vector<Vertex> order_;
};

inline long ring_index(double dist, double width) {
  return static_cast<long>(std::floor(dist / width + 1e-9));
}

/// Connected components of the rings of width delta/2 around the root.
inline Partition tree_scattering_partition(const RootedTree& t, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  const double h = delta / 2;
  const auto n = t.graph().size();
  std::vector<std::size_t> label(n);
  std::size_t next = 0;
  for (Vertex v : t.order()) {
    Vertex p = t.parent(v);
    if (p != kNoVertex && ring_index(t.depth(p), h) == ring_index(t.depth(v), h)) {
      label[v] = label[p];
    } else {
      label[v] = next++;
    }
  }
  return Partition::from_labels(label, delta);
}

/// Rings of width delta/4; two ring-i vertices share a cluster when they have
/// a common ancestor in ring i-1 or ring i.
inline Partition tree_weak_partition(const RootedTree& t, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  const double h = delta / 4;
  const auto n = t.graph().size();
  std::vector<long> ring(n);
  for (Vertex v = 0; v < n; ++v) ring[v] = ring_index(t.depth(v), h);
  std::map<std::pair<long, Vertex>, std::size_t> key;
  std::vector<std::size_t> label(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex anchor = v;
    while (t.parent(anchor) != kNoVertex && ring[t.parent(anchor)] >= ring[v] - 1) {
      anchor = t.parent(anchor);
    }
    auto [it, fresh] = key.try_emplace({ring[v], anchor}, key.size());
    label[v] = it->second;
  }
  return Partition::from_labels(label, delta);
}

}  // namespace scatterkit
