#pragma once

// Shortest path decompositions and the strong/weak sparse partitions they
// drive.

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/mpx.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class InvalidSPD : public GraphError {
 public:
  using GraphError::GraphError;
};
class NotShortestPath : public InvalidSPD {
 public:
  using InvalidSPD::InvalidSPD;
};
class NotComponentRefinement : public InvalidSPD {
 public:
  using InvalidSPD::InvalidSPD;
};
class VertexMissed : public InvalidSPD {
 public:
  using InvalidSPD::InvalidSPD;
};

struct SPDPart {
  VertexSet part;             // sorted
  std::vector<Vertex> path;   // ordered, a shortest path of G[part]
};

struct SPDHierarchy {
  std::vector<std::vector<SPDPart>> levels;
  std::size_t depth() const { return levels.size(); }
};

namespace detail {

inline Vertex farthest_within(const DistanceMap& dm, const VertexSet& part) {
  Vertex best = part.front();
  for (Vertex v : part) {
    if (approx_lt(dm.dist[best], dm.dist[v])) best = v;
  }
  return best;
}

}  // namespace detail

/// In each part, delete the canonical shortest path between the ends of a
/// double sweep started at the smallest vertex.
inline SPDHierarchy build_spd(const WeightedGraph& g) {
  SPDHierarchy spd;
  if (g.size() == 0) return spd;
  std::vector<VertexSet> current{all_vertices(g)};
  while (!current.empty()) {
    std::vector<SPDPart> level;
    std::vector<VertexSet> next;
    for (auto& X : current) {
      auto mask = make_mask(g.size(), X);
      auto from_a = shortest_paths_within(g, X.front(), mask);
      Vertex b = detail::farthest_within(from_a, X);
      auto from_b = shortest_paths_within(g, b, mask);
      Vertex c = detail::farthest_within(from_b, X);
      auto path = path_from_parents(g, from_b, c).vertices;
      for (Vertex v : path) mask[v] = 0;
      VertexSet rest;
      for (Vertex v : X) {
        if (mask[v]) rest.push_back(v);
      }
      if (!rest.empty()) {
        for (auto& comp : connected_components(g, rest)) next.push_back(std::move(comp));
      }
      level.push_back({std::move(X), std::move(path)});
    }
    spd.levels.push_back(std::move(level));
    current = std::move(next);
  }
  return spd;
}

inline void validate_spd(const WeightedGraph& g, const SPDHierarchy& spd) {
  const std::size_t n = g.size();
  if (spd.levels.empty()) {
    if (n == 0) return;
    throw VertexMissed("empty decomposition");
  }
  std::vector<VertexSet> expected{all_vertices(g)};
  std::vector<int> deleted(n, 0);
  for (std::size_t i = 0; i < spd.levels.size(); ++i) {
    const auto& level = spd.levels[i];
    std::set<VertexSet> want(expected.begin(), expected.end());
    std::set<VertexSet> got;
    for (const auto& p : level) {
      VertexSet s = p.part;
      std::sort(s.begin(), s.end());
      got.insert(std::move(s));
    }
    if (want != got) {
      throw NotComponentRefinement("level " + std::to_string(i + 1) +
                                   " parts are not the components left by the previous level");
    }
    expected.clear();
    for (const auto& p : level) {
      if (p.path.empty()) {
        throw NotShortestPath("level " + std::to_string(i + 1) + " part has an empty path");
      }
      auto mask = make_mask(n, p.part);
      double len = 0;
      for (std::size_t k = 0; k < p.path.size(); ++k) {
        Vertex v = p.path[k];
        if (v >= n || !mask[v]) {
          throw NotShortestPath("path vertex " + std::to_string(v) + " lies outside its part");
        }
        if (k > 0) {
          auto w = g.edge_weight(p.path[k - 1], v);
          if (!w) {
            throw NotShortestPath("path step " + std::to_string(p.path[k - 1]) + "-" +
                                  std::to_string(v) + " is not an edge");
          }
          len += *w;
        }
      }
      auto dm = shortest_paths_within(g, p.path.front(), mask);
      if (!approx_eq(dm.dist[p.path.back()], len)) {
        throw NotShortestPath("path of length " + std::to_string(len) +
                              " is not shortest in its part");
      }
      for (Vertex v : p.path) {
        if (deleted[v]++) throw NotShortestPath("vertex " + std::to_string(v) + " deleted twice");
        mask[v] = 0;
      }
      VertexSet rest;
      for (Vertex v : p.part) {
        if (mask[v]) rest.push_back(v);
      }
      if (!rest.empty()) {
        for (auto& c : connected_components(g, rest)) expected.push_back(std::move(c));
      }
    }
  }
  if (!expected.empty()) {
    throw VertexMissed("vertex " + std::to_string(expected.front().front()) +
                       " is never deleted");
  }
}

// SPD file: one line per part, "level <i> part <v...> path <v...>".
inline SPDHierarchy parse_spd(std::istream& in) {
  SPDHierarchy spd;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    auto fail = [&](const std::string& why) {
      throw ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    std::size_t level = 0;
    if (tok != "level" || !(ls >> level) || level == 0) fail("expected 'level <i>'");
    if (!(ls >> tok) || tok != "part") fail("expected 'part'");
    SPDPart p;
    bool in_path = false;
    while (ls >> tok) {
      if (tok == "path") {
        if (in_path) fail("repeated 'path'");
        in_path = true;
        continue;
      }
      long long v;
      try {
        std::size_t used = 0;
        v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        fail("bad vertex id '" + tok + "'");
      }
      (in_path ? p.path : p.part).push_back(static_cast<Vertex>(v));
    }
    if (!in_path) fail("missing 'path'");
    std::sort(p.part.begin(), p.part.end());
    if (spd.levels.size() < level) spd.levels.resize(level);
    spd.levels[level - 1].push_back(std::move(p));
  }
  return spd;
}

inline void write_spd(std::ostream& out, const SPDHierarchy& spd) {
  for (std::size_t i = 0; i < spd.levels.size(); ++i) {
    for (const auto& p : spd.levels[i]) {
      out << "level " << i + 1 << " part";
      for (Vertex v : p.part) out << ' ' << v;
      out << " path";
      for (Vertex v : p.path) out << ' ' << v;
      out << '\n';
    }
  }
}

/// Greedy net of a path in its own length metric, scanning from the first
/// endpoint.
inline std::vector<Vertex> path_net(const WeightedGraph& g, const std::vector<Vertex>& path,
                                    double spacing) {
  std::vector<Vertex> net;
  if (path.empty()) return net;
  net.push_back(path.front());
  double since = 0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    since += *g.edge_weight(path[k - 1], path[k]);
    if (approx_lt(spacing, since)) {
      net.push_back(path[k]);
      since = 0;
    }
  }
  return net;
}

/// Checks |ball(v, r) ∩ net| <= ceil(2r / spacing) (at least 1) for a net on
/// a shortest path whose points are more than `spacing` apart.
inline bool path_net_count_check(const WeightedGraph& g, const std::vector<Vertex>& path,
                                 const std::vector<Vertex>& net, Vertex v, double r,
                                 double spacing) {
  (void)path;
  auto b = ball(g, v, r);
  auto mask = make_mask(g.size(), b);
  std::size_t count = 0;
  for (Vertex t : net) count += mask[t] ? 1 : 0;
  const double bound = std::max(1.0, std::ceil(2 * r / spacing - 1e-9));
  return static_cast<double>(count) <= bound;
}

/// Deterministic shifts: centers on level-i paths get alpha_i =
/// (1 + 2/rho)^(rho + 1 - i) * delta and are spaced beta_i = alpha_{i+1}/rho.
inline ShiftAssignment spd_strong_shifts(const WeightedGraph& g, const SPDHierarchy& spd,
                                         double delta) {
  const auto rho = static_cast<double>(spd.depth());
  const double eps = 1.0 / rho;
  auto alpha = [&](std::size_t i) { return std::pow(1 + 2 * eps, rho + 1 - static_cast<double>(i)) * delta; };
  ShiftAssignment s;
  for (std::size_t i = 1; i <= spd.depth(); ++i) {
    const double beta = eps * alpha(i + 1);
    for (const auto& p : spd.levels[i - 1]) {
      for (Vertex t : path_net(g, p.path, beta)) s.add(t, alpha(i));
    }
  }
  s.sort_by_id();
  return s;
}

inline Partition spd_strong_partition(const WeightedGraph& g, const SPDHierarchy& spd,
                                      double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  validate_spd(g, spd);
  return mpx_cluster(g, spd_strong_shifts(g, spd, delta), delta);
}

/// Two phases: vertices settle at the first level whose path is within
/// delta/4 inside the part, then each settled group is carved into balls of
/// radius delta/2 around a net of the path.
inline Partition spd_weak_partition(const WeightedGraph& g, const SPDHierarchy& spd, double delta,
                                    double net_spacing_factor = 0.25) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  validate_spd(g, spd);
  const std::size_t n = g.size();
  std::vector<char> active(n, 1);
  struct Group {
    const SPDPart* part;
    VertexSet members;
  };
  std::vector<Group> groups;
  for (const auto& level : spd.levels) {
    for (const auto& p : level) {
      auto mask = make_mask(n, p.part);
      auto dm = multi_source_distances(g, p.path, &mask, delta / 4);
      Group grp{&p, {}};
      for (Vertex v : p.part) {
        if (active[v] && approx_le(dm.dist[v], delta / 4)) {
          grp.members.push_back(v);
          active[v] = 0;
        }
      }
      if (!grp.members.empty()) groups.push_back(std::move(grp));
    }
  }
  std::vector<VertexSet> clusters;
  std::vector<char> placed(n, 0);
  for (const auto& grp : groups) {
    auto mask = make_mask(n, grp.part->part);
    for (Vertex t : path_net(g, grp.part->path, net_spacing_factor * delta)) {
      Vertex src[1] = {t};
      auto dm = detail::dijkstra(g, src, &mask, delta / 2);
      VertexSet c;
      for (Vertex u : grp.members) {
        if (!placed[u] && approx_le(dm.dist[u], delta / 2)) {
          placed[u] = 1;
          c.push_back(u);
        }
      }
      if (!c.empty()) clusters.push_back(std::move(c));
    }
  }
  return Partition(n, std::move(clusters), delta);
}

}  // namespace scatterkit
