#pragma once

// Weighted undirected graphs and the shortest-path primitives every
// partitioning scheme in this library is built on.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scatterkit {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Absolute tolerance for every distance comparison in the library.
inline constexpr double kEps = 1e-9;

inline bool approx_le(double a, double b) { return a <= b + kEps; }
inline bool approx_lt(double a, double b) { return a < b - kEps; }
inline bool approx_eq(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= kEps;
}

// ---------------------------------------------------------------------------
// Errors

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

class DisconnectedGraph : public GraphError {
 public:
  using GraphError::GraphError;
};

class NegativeWeight : public GraphError {
 public:
  using GraphError::GraphError;
};

class InvalidEdge : public GraphError {
 public:
  using GraphError::GraphError;
};

class EmptyCluster : public GraphError {
 public:
  using GraphError::GraphError;
};

class EmptySet : public GraphError {
 public:
  using GraphError::GraphError;
};

// ---------------------------------------------------------------------------

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double w = 0.0;

  bool operator==(const Edge&) const = default;
};

struct Arc {
  Vertex to = 0;
  double w = 0.0;
};

/// Immutable undirected graph with non-negative edge weights, stored as a
/// sorted adjacency array. Connectivity is not a class invariant (induced
/// subgraphs may fall apart); load_graph() enforces it for inputs.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n) {
    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw InvalidEdge("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          ") references a vertex >= n=" + std::to_string(n));
      }
      if (e.u == e.v) throw InvalidEdge("self loop at vertex " + std::to_string(e.u));
      if (!(e.w >= 0.0) || std::isinf(e.w)) {
        throw NegativeWeight("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has invalid weight " + std::to_string(e.w));
      }
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
        throw InvalidEdge("duplicate edge (" + std::to_string(edges[i].u) + "," +
                          std::to_string(edges[i].v) + ")");
      }
    }
    edges_ = std::move(edges);

    offsets_.assign(n_ + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    arcs_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
      arcs_[fill[e.u]++] = {e.v, e.w};
      arcs_[fill[e.v]++] = {e.u, e.w};
    }
    for (std::size_t v = 0; v < n_; ++v) {
      std::sort(arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                arcs_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]),
                [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }
  }

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Arc> neighbors(Vertex v) const {
    return {arcs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<double> edge_weight(Vertex u, Vertex v) const {
    auto adj = neighbors(u);
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
                               [](const Arc& a, Vertex x) { return a.to < x; });
    if (it != adj.end() && it->to == v) return it->w;
    return std::nullopt;
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_weight(u, v).has_value(); }

  bool is_unit_weighted() const {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.w == 1.0; });
  }

  double min_edge_weight() const {
    double m = kInfinity;
    for (const auto& e : edges_) m = std::min(m, e.w);
    return m;
  }

  bool is_connected() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
};

/// Membership mask over the vertices of a graph.
using VertexMask = std::vector<char>;

inline VertexMask make_mask(std::size_t n, std::span<const Vertex> members) {
  VertexMask mask(n, 0);
  for (Vertex v : members) mask[v] = 1;
  return mask;
}

// ---------------------------------------------------------------------------
// Shortest paths

/// Single-source (or multi-source) shortest-path result. parent[v] is the
/// smallest-id predecessor that was settled before v among those realising
/// dist[v]; following parents always terminates at a source.
struct DistanceMap {
  Vertex source = kNoVertex;
  std::vector<double> dist;
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> settle_rank;

  bool reachable(Vertex v) const { return !std::isinf(dist[v]); }
};

namespace detail {

inline DistanceMap dijkstra(const WeightedGraph& g, std::span<const Vertex> sources,
                            const VertexMask* allowed, double bound = kInfinity) {
  const std::size_t n = g.size();
  DistanceMap out;
  out.source = sources.size() == 1 ? sources[0] : kNoVertex;
  out.dist.assign(n, kInfinity);
  out.parent.assign(n, kNoVertex);
  out.settle_rank.assign(n, std::numeric_limits<std::uint32_t>::max());

  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (Vertex s : sources) {
    if (allowed && !(*allowed)[s]) continue;
    out.dist[s] = 0.0;
    heap.emplace(0.0, s);
  }
  std::vector<char> done(n, 0);
  std::uint32_t rank = 0;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (done[v] || d > out.dist[v]) continue;
    done[v] = 1;
    out.settle_rank[v] = rank++;
    for (const Arc& a : g.neighbors(v)) {
      if (allowed && !(*allowed)[a.to]) continue;
      double nd = d + a.w;
      if (nd > bound + kEps) continue;
      if (nd < out.dist[a.to]) {
        out.dist[a.to] = nd;
        heap.emplace(nd, a.to);
      }
    }
  }
  // Canonical parents: smallest-id neighbour settled earlier on a tight edge.
  std::vector<char> is_source(n, 0);
  for (Vertex s : sources) is_source[s] = 1;
  for (Vertex v = 0; v < n; ++v) {
    if (!done[v] || is_source[v]) continue;
    for (const Arc& a : g.neighbors(v)) {
      if (!done[a.to] || out.settle_rank[a.to] >= out.settle_rank[v]) continue;
      if (approx_eq(out.dist[a.to] + a.w, out.dist[v])) {
        out.parent[v] = a.to;
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

inline DistanceMap shortest_paths(const WeightedGraph& g, Vertex source) {
  if (source >= g.size()) throw std::out_of_range("shortest_paths: source out of range");
  Vertex s[1] = {source};
  return detail::dijkstra(g, s, nullptr);
}

/// Distances in the induced subgraph G[mask].
inline DistanceMap shortest_paths_within(const WeightedGraph& g, Vertex source,
                                         const VertexMask& mask) {
  Vertex s[1] = {source};
  return detail::dijkstra(g, s, &mask);
}

/// d(v, sources) for every v, optionally restricted to G[mask].
inline DistanceMap multi_source_distances(const WeightedGraph& g,
                                          std::span<const Vertex> sources,
                                          const VertexMask* mask = nullptr,
                                          double bound = kInfinity) {
  return detail::dijkstra(g, sources, mask, bound);
}

inline bool WeightedGraph::is_connected() const {
  if (n_ <= 1) return true;
  auto dm = shortest_paths(*this, 0);
  return std::none_of(dm.dist.begin(), dm.dist.end(),
                      [](double d) { return std::isinf(d); });
}

/// Dense all-pairs distance table (n Dijkstra runs).
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const WeightedGraph& g) : n_(g.size()), d_(n_ * n_) {
    for (Vertex s = 0; s < n_; ++s) {
      auto dm = shortest_paths(g, s);
      std::copy(dm.dist.begin(), dm.dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }
  double operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

struct Path {
  std::vector<Vertex> vertices;
  double length = 0.0;
};

/// Builds the path source -> target from the parent pointers of `dm`.
inline Path path_from_parents(const WeightedGraph& g, const DistanceMap& dm, Vertex target) {
  Path p;
  if (!dm.reachable(target)) return p;
  for (Vertex v = target; v != kNoVertex; v = dm.parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    p.length += *g.edge_weight(p.vertices[i - 1], p.vertices[i]);
  }
  return p;
}

/// Deterministic shortest u-v path (smallest-id predecessor rule).
inline Path canonical_shortest_path(const WeightedGraph& g, Vertex u, Vertex v) {
  if (u == v) return Path{{u}, 0.0};
  return path_from_parents(g, shortest_paths(g, u), v);
}

inline double path_length(const WeightedGraph& g, std::span<const Vertex> path) {
  double len = 0.0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    auto w = g.edge_weight(path[i - 1], path[i]);
    if (!w) {
      throw InvalidEdge("path step (" + std::to_string(path[i - 1]) + "," +
                        std::to_string(path[i]) + ") is not an edge");
    }
    len += *w;
  }
  return len;
}

/// Closed ball B(center, radius).
inline VertexSet ball(const WeightedGraph& g, Vertex center, double radius) {
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  Vertex s[1] = {center};
  auto dm = detail::dijkstra(g, s, nullptr, radius);
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (approx_le(dm.dist[v], radius)) out.push_back(v);
  }
  return out;
}

inline double weak_diameter(const WeightedGraph& g, std::span<const Vertex> cluster) {
  if (cluster.empty()) throw EmptyCluster("weak_diameter of an empty cluster");
  double best = 0.0;
  for (Vertex s : cluster) {
    auto dm = shortest_paths(g, s);
    for (Vertex t : cluster) best = std::max(best, dm.dist[t]);
  }
  return best;
}

/// Diameter of G[cluster]; infinity when the induced graph is disconnected.
inline double strong_diameter(const WeightedGraph& g, std::span<const Vertex> cluster) {
  if (cluster.empty()) throw EmptyCluster("strong_diameter of an empty cluster");
  auto mask = make_mask(g.size(), cluster);
  double best = 0.0;
  for (Vertex s : cluster) {
    auto dm = shortest_paths_within(g, s, mask);
    for (Vertex t : cluster) best = std::max(best, dm.dist[t]);
  }
  return best;
}

struct InducedSubgraph {
  WeightedGraph graph;
  std::vector<Vertex> to_parent;    // local id -> parent id
  std::vector<Vertex> from_parent;  // parent id -> local id (kNoVertex if absent)
};

inline InducedSubgraph induced_subgraph(const WeightedGraph& g, std::span<const Vertex> members) {
  if (members.empty()) throw EmptySet("induced_subgraph of an empty vertex set");
  InducedSubgraph out;
  out.to_parent.assign(members.begin(), members.end());
  std::sort(out.to_parent.begin(), out.to_parent.end());
  out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()),
                      out.to_parent.end());
  out.from_parent.assign(g.size(), kNoVertex);
  for (Vertex i = 0; i < out.to_parent.size(); ++i) out.from_parent[out.to_parent[i]] = i;
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    Vertex a = out.from_parent[e.u], b = out.from_parent[e.v];
    if (a != kNoVertex && b != kNoVertex) edges.push_back({a, b, e.w});
  }
  out.graph = WeightedGraph(out.to_parent.size(), std::move(edges));
  return out;
}

/// Connected components of G[members], each sorted, ordered by smallest id.
inline std::vector<VertexSet> connected_components(const WeightedGraph& g,
                                                   std::span<const Vertex> members) {
  auto mask = make_mask(g.size(), members);
  std::vector<char> seen(g.size(), 0);
  VertexSet sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexSet> comps;
  for (Vertex s : sorted) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const Arc& a : g.neighbors(v)) {
        if (mask[a.to] && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline VertexSet all_vertices(const WeightedGraph& g) {
  VertexSet v(g.size());
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

inline std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  auto all = all_vertices(g);
  return connected_components(g, all);
}

// ---------------------------------------------------------------------------
// Text format: "n m" header, then m lines "u v w". '#' starts a comment.

inline WeightedGraph parse_graph(std::istream& in, bool require_connected = true) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    ls.clear();
    ls.seekg(0);
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    if (!header) {
      long long n = -1, m = -1;
      if (!(ls >> n >> m) || n < 0 || m < 0) fail("expected header 'n m'");
      std::string extra;
      if (ls >> extra) fail("trailing tokens after header");
      header = {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
      continue;
    }
    long long u = -1, v = -1;
    double w = 0;
    if (!(ls >> u >> v >> w)) fail("expected edge 'u v w'");
    std::string extra;
    if (ls >> extra) fail("trailing tokens after edge");
    if (u < 0 || v < 0) fail("negative vertex id");
    if (w < 0) throw NegativeWeight("line " + std::to_string(lineno) + ": negative weight");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
  }
  if (!header) throw ParseError("missing header line");
  if (edges.size() != header->second) {
    throw ParseError("header declares " + std::to_string(header->second) + " edges, found " +
                     std::to_string(edges.size()));
  }
  WeightedGraph g(header->first, std::move(edges));
  if (require_connected && !g.is_connected()) {
    throw DisconnectedGraph("graph with " + std::to_string(g.size()) + " vertices is disconnected");
  }
  return g;
}

inline WeightedGraph load_graph(std::istream& in) { return parse_graph(in, true); }

inline WeightedGraph load_graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

inline void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.size() << ' ' << g.edge_count() << '\n';
  auto old = out.precision(17);
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  out.precision(old);
}

}  // namespace scatterkit
