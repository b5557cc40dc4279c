#pragma once

// Steiner point removal from scattering partitions: vertices are assigned to
// terminals ring by ring using per-scale partitions of the unassigned graph,
// and the resulting terminal partition is contracted into a minor.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "scatterkit/cactus.hpp"
#include "scatterkit/chordal.hpp"
#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"
#include "scatterkit/tree.hpp"

namespace scatterkit {

class SchemeViolation : public GraphError {
 public:
  using GraphError::GraphError;
};
class UnlinkableCluster : public GraphError {
 public:
  using GraphError::GraphError;
};
class DisconnectedFiber : public GraphError {
 public:
  using GraphError::GraphError;
};

/// A partition scheme usable on every induced subgraph of the input family.
/// The callback receives a connected graph and returns a partition of it.
struct ScatteringScheme {
  std::string name;
  double sigma = 1;
  std::size_t tau = 1;
  std::function<Partition(const WeightedGraph&, double)> partition;

  /// tau of the equivalent sigma = 1 scheme.
  std::size_t tau_one() const { return as_sigma_one(sigma, tau).second; }
};

inline ScatteringScheme tree_scheme() {
  return {"tree-scatter", 2, 3, [](const WeightedGraph& g, double delta) {
            return tree_scattering_partition(RootedTree(g, 0), delta);
          }};
}

inline ScatteringScheme chordal_scheme() {
  return {"chordal", 2, 3, [](const WeightedGraph& g, double delta) {
            return chordal_scattering_partition(g, static_cast<long>(std::floor(delta + 1e-9)));
          }};
}

inline ScatteringScheme cactus_scheme() {
  return {"cactus", 4, 5, [](const WeightedGraph& g, double delta) {
            return cactus_scattering_partition(g, delta);
          }};
}

struct TerminalAssignment {
  std::vector<Vertex> terminal;    // f(v)
  std::vector<int> iteration;      // 0 for terminals
};

struct SprClusterRecord {
  int iteration = 0;
  std::size_t level = 0;
  Vertex linking = kNoVertex;
  VertexSet members;
};

struct SPRSolution {
  VertexSet terminals;             // sorted; minor vertex i is terminals[i]
  WeightedGraph minor;             // original (unscaled) weights
  TerminalAssignment assignment;
  double scale = 1;                // normalization factor applied to weights
  std::vector<double> D;           // normalized distance to the nearest terminal
  std::vector<double> to_assigned; // normalized d(v, f(v))
  std::vector<SprClusterRecord> clusters;
  double distortion = 1;
  std::pair<Vertex, Vertex> worst_pair{kNoVertex, kNoVertex};
  std::size_t tau_used = 0;
};

/// Contracts every fiber; the edge between two fibers weighs d_G of their
/// terminals.
inline WeightedGraph contract_minor(const WeightedGraph& g, const VertexSet& terminals,
                                    const std::vector<Vertex>& f) {
  std::map<Vertex, Vertex> index;
  for (Vertex i = 0; i < terminals.size(); ++i) index[terminals[i]] = i;
  std::vector<VertexSet> fibers(terminals.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto it = index.find(f[v]);
    if (it == index.end()) throw DisconnectedFiber("vertex " + std::to_string(v) + " is unassigned");
    fibers[it->second].push_back(v);
  }
  for (Vertex i = 0; i < fibers.size(); ++i) {
    if (f[terminals[i]] != terminals[i]) {
      throw DisconnectedFiber("terminal " + std::to_string(terminals[i]) + " is not in its own fiber");
    }
    if (connected_components(g, fibers[i]).size() != 1) {
      throw DisconnectedFiber("fiber of terminal " + std::to_string(terminals[i]) + " is disconnected");
    }
  }
  std::map<std::pair<Vertex, Vertex>, bool> adjacent;
  for (const auto& e : g.edges()) {
    Vertex a = index[f[e.u]], b = index[f[e.v]];
    if (a != b) adjacent[{std::min(a, b), std::max(a, b)}] = true;
  }
  std::vector<Edge> edges;
  std::map<Vertex, std::vector<double>> dist;
  for (const auto& [pair, _] : adjacent) {
    Vertex ta = terminals[pair.first];
    if (!dist.count(ta)) dist[ta] = shortest_paths(g, ta).dist;
    edges.push_back({pair.first, pair.second, dist[ta][terminals[pair.second]]});
  }
  return WeightedGraph(terminals.size(), std::move(edges));
}

struct DistortionResult {
  double ratio = 1;
  std::pair<Vertex, Vertex> pair{kNoVertex, kNoVertex};
  bool dominating = true;  // d_M >= d_G on every pair
};

inline DistortionResult distortion(const WeightedGraph& g, const VertexSet& terminals,
                                   const WeightedGraph& minor) {
  DistortionResult out;
  for (Vertex i = 0; i < terminals.size(); ++i) {
    auto dg = shortest_paths(g, terminals[i]).dist;
    auto dm = shortest_paths(minor, i).dist;
    for (Vertex j = i + 1; j < terminals.size(); ++j) {
      double a = dg[terminals[j]], b = dm[j];
      if (approx_lt(b, a)) out.dominating = false;
      double ratio = a > 0 ? b / a : (b > 0 ? kInfinity : 1.0);
      if (ratio > out.ratio) {
        out.ratio = ratio;
        out.pair = {terminals[i], terminals[j]};
      }
    }
  }
  return out;
}

inline SPRSolution solve_spr(const WeightedGraph& g, VertexSet terminals,
                             const ScatteringScheme& scheme) {
  const std::size_t n = g.size();
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw std::invalid_argument("solve_spr needs at least one terminal");
  for (Vertex t : terminals) {
    if (t >= n) throw std::out_of_range("terminal out of range");
  }
  if (n > 1 && !(g.min_edge_weight() > 0)) {
    throw std::invalid_argument("solve_spr needs positive edge weights");
  }

  SPRSolution sol;
  sol.terminals = terminals;
  sol.tau_used = scheme.tau_one();
  sol.scale = n > 1 ? 1.0 / g.min_edge_weight() : 1.0;
  std::vector<Edge> scaled_edges = g.edges();
  for (auto& e : scaled_edges) e.w *= sol.scale;
  const WeightedGraph h(n, std::move(scaled_edges));

  sol.D = multi_source_distances(h, terminals).dist;
  auto& f = sol.assignment.terminal;
  auto& iter = sol.assignment.iteration;
  f.assign(n, kNoVertex);
  iter.assign(n, -1);
  for (Vertex t : terminals) {
    f[t] = t;
    iter[t] = 0;
  }
  std::size_t left = n - terminals.size();

  for (int i = 1; left > 0; ++i) {
    if (i > 2100) throw std::runtime_error("solve_spr did not terminate");
    const double delta = std::ldexp(1.0, i - 1);
    const double ring_top = std::ldexp(1.0, i);
    VertexSet unassigned;
    for (Vertex v = 0; v < n; ++v) {
      if (f[v] == kNoVertex) unassigned.push_back(v);
    }
    // P_i, computed per component of G_i.
    std::vector<VertexSet> clusters;
    for (const auto& comp : connected_components(h, unassigned)) {
      auto sub = induced_subgraph(h, comp);
      auto p = scheme.partition(sub.graph, delta);
      p.check_vertex_count(sub.graph);
      for (const auto& c : p.clusters()) {
        if (connected_components(sub.graph, c).size() != 1) {
          throw SchemeViolation(scheme.name + " returned a disconnected cluster at delta " +
                                std::to_string(delta));
        }
        if (!detail::cluster_diameter(sub.graph, c, delta, false).within) {
          throw SchemeViolation(scheme.name + " returned a cluster of weak diameter > " +
                                std::to_string(delta));
        }
        VertexSet global;
        for (Vertex v : c) global.push_back(sub.to_parent[v]);
        clusters.push_back(std::move(global));
      }
    }
    // C_i: clusters meeting ring i.
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::any_of(clusters[c].begin(), clusters[c].end(),
                      [&](Vertex v) { return approx_lt(sol.D[v], ring_top); })) {
        chosen.push_back(c);
      }
    }
    std::vector<std::size_t> owner(n, static_cast<std::size_t>(-1));
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      for (Vertex v : clusters[chosen[k]]) owner[v] = k;
    }
    std::vector<std::size_t> level(chosen.size(), 0);
    std::vector<Vertex> link(chosen.size(), kNoVertex);
    // Level l clusters link through an edge of weight <= 2^i into V_{i-1}
    // (l = 1) or into a level l-1 cluster.
    auto qualifies = [&](Vertex u, std::size_t l) {
      if (l == 1) return f[u] != kNoVertex;
      return owner[u] != static_cast<std::size_t>(-1) && level[owner[u]] == l - 1;
    };
    std::size_t placed = 0;
    for (std::size_t l = 1; placed < chosen.size(); ++l) {
      std::vector<std::pair<std::size_t, Vertex>> found;
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        if (level[k]) continue;
        Vertex best_u = kNoVertex;
        for (Vertex v : clusters[chosen[k]]) {
          for (const Arc& a : h.neighbors(v)) {
            if (approx_le(a.w, ring_top) && qualifies(a.to, l) && a.to < best_u) best_u = a.to;
          }
        }
        if (best_u != kNoVertex) found.emplace_back(k, best_u);
      }
      if (found.empty()) {
        throw UnlinkableCluster("a cluster of iteration " + std::to_string(i) +
                                " has no linking edge");
      }
      for (auto [k, u] : found) {
        level[k] = l;
        link[k] = u;
        ++placed;
      }
      for (auto [k, u] : found) {
        for (Vertex v : clusters[chosen[k]]) {
          f[v] = f[u];
          iter[v] = i;
          --left;
        }
      }
    }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      sol.clusters.push_back({i, level[k], link[k], clusters[chosen[k]]});
    }
  }

  sol.to_assigned.assign(n, 0);
  {
    std::map<Vertex, std::vector<double>> dist;
    for (Vertex t : terminals) dist[t] = shortest_paths(h, t).dist;
    for (Vertex v = 0; v < n; ++v) sol.to_assigned[v] = dist[f[v]][v];
  }
  sol.minor = contract_minor(g, terminals, f);
  auto d = distortion(g, terminals, sol.minor);
  sol.distortion = d.ratio;
  sol.worst_pair = d.pair;
  return sol;
}

struct SprDiagnostics {
  bool level_bound = true;       // every level <= tau
  bool distance_by_round = true; // d(v, f(v)) <= 3 tau 2^i
  bool distance_by_D = true;     // d(v, f(v)) <= 6 tau D(v)
  bool round_window = true;      // 2^(i-1) <= D(v) <= 3 * 2^(i-1)
  bool fibers_valid = true;
  bool dominating = true;
  std::vector<std::string> violations;

  bool ok() const {
    return level_bound && distance_by_round && distance_by_D && round_window && fibers_valid &&
           dominating;
  }
};

inline SprDiagnostics assignment_diagnostics(const WeightedGraph& g, const SPRSolution& sol,
                                             std::size_t tau) {
  SprDiagnostics out;
  const double t = static_cast<double>(tau);
  for (const auto& c : sol.clusters) {
    if (c.level > tau) {
      out.level_bound = false;
      out.violations.push_back("cluster of iteration " + std::to_string(c.iteration) +
                               " has level " + std::to_string(c.level));
    }
  }
  for (Vertex v = 0; v < g.size(); ++v) {
    const int i = sol.assignment.iteration[v];
    if (i <= 0) continue;
    const double dv = sol.to_assigned[v];
    const double step = std::ldexp(1.0, i - 1);
    if (!approx_le(dv, 3 * t * 2 * step)) {
      out.distance_by_round = false;
      out.violations.push_back("vertex " + std::to_string(v) + " is farther than 3 tau 2^i");
    }
    if (!approx_le(dv, 6 * t * sol.D[v])) {
      out.distance_by_D = false;
      out.violations.push_back("vertex " + std::to_string(v) + " is farther than 6 tau D(v)");
    }
    if (!approx_le(step, sol.D[v]) || !approx_le(sol.D[v], 3 * step)) {
      out.round_window = false;
      out.violations.push_back("vertex " + std::to_string(v) + " assigned at iteration " +
                               std::to_string(i) + " with D = " + std::to_string(sol.D[v]));
    }
  }
  try {
    contract_minor(g, sol.terminals, sol.assignment.terminal);
  } catch (const DisconnectedFiber& e) {
    out.fibers_valid = false;
    out.violations.push_back(e.what());
  }
  out.dominating = distortion(g, sol.terminals, sol.minor).dominating;
  if (!out.dominating) out.violations.push_back("minor distance below graph distance");
  return out;
}

}  // namespace scatterkit
