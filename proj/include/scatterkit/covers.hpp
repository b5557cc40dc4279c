#pragma once

// Conversions between sparse covers and weak sparse partitions, and the
// annulus-based cover for graphs excluding K_{r,r}.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class NotACover : public GraphError {
 public:
  NotACover(const std::string& what, Vertex v) : GraphError(what), vertex_(v) {}
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

/// Every vertex joins the first cluster that contains its delta/sigma ball.
inline Partition cover_to_partition(const WeightedGraph& g, const SparseCover& cover) {
  const std::size_t n = g.size();
  std::vector<VertexMask> masks;
  for (const auto& c : cover.clusters) masks.push_back(make_mask(n, c));
  std::vector<VertexSet> parts(cover.clusters.size());
  for (Vertex v = 0; v < n; ++v) {
    auto b = ball(g, v, cover.delta / cover.sigma);
    bool placed = false;
    for (std::size_t i = 0; i < masks.size() && !placed; ++i) {
      if (std::all_of(b.begin(), b.end(), [&](Vertex u) { return masks[i][u] != 0; })) {
        parts[i].push_back(v);
        placed = true;
      }
    }
    if (!placed) {
      throw NotACover("no cluster contains the padded ball of vertex " + std::to_string(v), v);
    }
  }
  std::erase_if(parts, [](const VertexSet& c) { return c.empty(); });
  return Partition(n, std::move(parts), cover.delta);
}

/// Grows each cluster by delta/sigma. The result is a (sigma+2)-padded cover
/// with diameter (1 + 2/sigma) * delta.
inline SparseCover partition_to_cover(const WeightedGraph& g, const Partition& p, double sigma) {
  const double grow = p.delta() / sigma;
  SparseCover out;
  out.sigma = sigma + 2;
  out.delta = (1 + 2 / sigma) * p.delta();
  for (const auto& c : p.clusters()) {
    auto dm = multi_source_distances(g, c, nullptr, grow);
    VertexSet grown;
    for (Vertex v = 0; v < g.size(); ++v) {
      if (approx_le(dm.dist[v], grow)) grown.push_back(v);
    }
    out.clusters.push_back(std::move(grown));
  }
  return out;
}

struct KprCover {
  SparseCover cover;
  double delta_prime = 0;        // annulus width
  double measured_diameter = 0;  // weak
  std::size_t partitions = 0;    // 2^r
};

namespace detail {

inline void kpr_recurse(const WeightedGraph& g, const VertexSet& piece, std::size_t depth,
                        double width, std::vector<std::vector<VertexSet>>& out_by_branch,
                        std::size_t branch) {
  if (depth == 0) {
    out_by_branch[branch].push_back(piece);
    return;
  }
  auto mask = make_mask(g.size(), piece);
  auto dm = shortest_paths_within(g, piece.front(), mask);
  for (int half = 0; half < 2; ++half) {
    const double b = 0.5 * half;
    std::map<long, VertexSet> annuli;
    for (Vertex v : piece) {
      long j = static_cast<long>(std::floor(dm.dist[v] / width - b + 1e-9)) + 1;
      annuli[j].push_back(v);
    }
    for (auto& [j, members] : annuli) {
      for (auto& comp : connected_components(g, members)) {
        kpr_recurse(g, comp, depth - 1, width, out_by_branch, branch * 2 + static_cast<std::size_t>(half));
      }
    }
  }
}

}  // namespace detail

/// Union of 2^r partitions obtained by r rounds of annulus cutting (width
/// delta / (c r^2), offsets 0 and 1/2) on connected pieces.
inline KprCover kpr_cover(const WeightedGraph& g, std::size_t r, double delta, double c_kpr = 2.0) {
  if (r < 1) throw std::invalid_argument("kpr_cover needs r >= 1");
  if (!(c_kpr > 0) || !(delta > 0)) throw std::invalid_argument("kpr_cover needs positive delta and c");
  KprCover out;
  out.delta_prime = delta / (c_kpr * static_cast<double>(r * r));
  out.partitions = std::size_t{1} << r;
  std::vector<std::vector<VertexSet>> branches(out.partitions);
  for (const auto& comp : connected_components(g)) {
    detail::kpr_recurse(g, comp, r, out.delta_prime, branches, 0);
  }
  for (auto& b : branches) {
    for (auto& c : b) out.cover.clusters.push_back(std::move(c));
  }
  for (const auto& c : out.cover.clusters) {
    out.measured_diameter = std::max(out.measured_diameter, weak_diameter(g, c));
  }
  out.cover.delta = std::max(out.measured_diameter, 0.0);
  out.cover.sigma = out.measured_diameter > 0 ? out.measured_diameter / (out.delta_prime / 4) : 1.0;
  return out;
}

}  // namespace scatterkit
