#pragma once

// Shifted-start clustering: every vertex joins the center t maximizing
// f_v(t) = delta_t - d(t, v).

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class NoCenters : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Centers with their shifts. Ties are resolved by position in `centers`
/// (smaller position wins); the default order is ascending id.
struct ShiftAssignment {
  std::vector<Vertex> centers;
  std::vector<double> shifts;

  void add(Vertex c, double delta) {
    centers.push_back(c);
    shifts.push_back(delta);
  }

  void sort_by_id() {
    std::vector<std::size_t> idx(centers.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return centers[a] < centers[b]; });
    ShiftAssignment s;
    for (auto i : idx) s.add(centers[i], shifts[i]);
    *this = std::move(s);
  }
};

/// Per-center distance maps, reusable by the claim checkers.
class ShiftField {
 public:
  ShiftField(const WeightedGraph& g, const ShiftAssignment& s) : shifts_(&s) {
    if (s.centers.empty()) throw NoCenters("mpx clustering needs at least one center");
    if (s.centers.size() != s.shifts.size()) {
      throw std::invalid_argument("centers and shifts differ in length");
    }
    std::vector<char> seen(g.size(), 0);
    for (std::size_t i = 0; i < s.centers.size(); ++i) {
      Vertex c = s.centers[i];
      if (c >= g.size()) throw std::out_of_range("center out of range");
      if (seen[c]) throw std::invalid_argument("center " + std::to_string(c) + " repeated");
      seen[c] = 1;
      if (s.shifts[i] < 0) throw std::invalid_argument("negative shift");
      dist_.push_back(shortest_paths(g, c).dist);
    }
  }

  std::size_t size() const { return dist_.size(); }

  double f(Vertex v, std::size_t i) const { return shifts_->shifts[i] - dist_[i][v]; }

  /// Index of the winning center for v; ties go to the nearer center, then
  /// to the earlier one in the list.
  std::size_t best(Vertex v) const {
    std::size_t b = 0;
    for (std::size_t i = 1; i < dist_.size(); ++i) {
      const double gap = f(v, i) - f(v, b);
      if (gap > kEps || (gap >= -kEps && dist_[i][v] < dist_[b][v] - kEps)) b = i;
    }
    return b;
  }

 private:
  const ShiftAssignment* shifts_;
  std::vector<std::vector<double>> dist_;
};

inline Partition mpx_cluster(const WeightedGraph& g, const ShiftAssignment& s, double delta = 0.0) {
  ShiftField field(g, s);
  std::vector<std::vector<Vertex>> members(s.centers.size());
  for (Vertex v = 0; v < g.size(); ++v) members[field.best(v)].push_back(v);
  std::vector<VertexSet> clusters;
  std::vector<Vertex> centers;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].empty()) continue;
    clusters.push_back(std::move(members[i]));
    centers.push_back(s.centers[i]);
  }
  return Partition(g.size(), std::move(clusters), delta, std::move(centers));
}

/// Every vertex on the canonical shortest path from a member to its center
/// lies in the same cluster.
inline bool check_mpx_path_property(const WeightedGraph& g, const Partition& p) {
  if (!p.centers()) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex t = (*p.centers())[i];
    auto dm = shortest_paths(g, t);
    for (Vertex v : p.cluster(i)) {
      auto path = path_from_parents(g, dm, v);
      for (Vertex u : path.vertices) {
        if (p.cluster_of(u) != i) return false;
      }
    }
  }
  return true;
}

inline bool check_mpx_path_property(const WeightedGraph& g, const ShiftAssignment&,
                                    const Partition& p) {
  return check_mpx_path_property(g, p);
}

/// No cluster whose center trails v's best center by more than 2r meets
/// ball(v, r).
inline bool check_mpx_intersection_property(const WeightedGraph& g, const ShiftAssignment& s,
                                            const Partition& p, Vertex v, double r,
                                            const ShiftField* field = nullptr) {
  std::optional<ShiftField> own;
  if (!field) field = &own.emplace(g, s);
  const double top = field->f(v, field->best(v));
  auto b = ball(g, v, r);
  std::vector<char> met(p.size(), 0);
  for (Vertex u : b) met[p.cluster_of(u)] = 1;
  const auto& centers = *p.centers();
  for (std::size_t i = 0; i < s.centers.size(); ++i) {
    if (!(top - field->f(v, i) > 2 * r + kEps)) continue;
    auto it = std::find(centers.begin(), centers.end(), s.centers[i]);
    if (it == centers.end()) continue;
    if (met[static_cast<std::size_t>(it - centers.begin())]) return false;
  }
  return true;
}

// Shift file: one "center delta" pair per line, '#' comments allowed.
inline ShiftAssignment parse_shifts(std::istream& in) {
  ShiftAssignment s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    long long c;
    double d;
    if (!(ls >> c)) continue;
    if (!(ls >> d) || c < 0) throw ParseError("line " + std::to_string(lineno) + ": expected 'center delta'");
    s.add(static_cast<Vertex>(c), d);
  }
  return s;
}

inline void write_shifts(std::ostream& out, const ShiftAssignment& s) {
  auto old = out.precision(17);
  for (std::size_t i = 0; i < s.centers.size(); ++i) out << s.centers[i] << ' ' << s.shifts[i] << '\n';
  out.precision(old);
}

}  // namespace scatterkit
