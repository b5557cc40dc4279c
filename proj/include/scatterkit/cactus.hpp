#pragma once

// Cactus graphs: recognition through biconnected blocks, an ear-style
// composition from a single vertex, and a (4,5)-scattering partition built
// along that composition.

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "scatterkit/graph.hpp"
#include "scatterkit/partition.hpp"

namespace scatterkit {

class NotCactus : public GraphError {
 public:
  NotCactus(const std::string& what, std::vector<Edge> block)
      : GraphError(what), block_(std::move(block)) {}
  /// Edges of a block that is neither a bridge nor a simple cycle.
  const std::vector<Edge>& block() const { return block_; }

 private:
  std::vector<Edge> block_;
};

/// Biconnected components as edge lists (Hopcroft-Tarjan, iterative).
inline std::vector<std::vector<Edge>> biconnected_blocks(const WeightedGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> estack;
  std::vector<std::vector<Edge>> blocks;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (disc[s]) continue;
    std::vector<Frame> st{{s, kNoVertex, 0}};
    disc[s] = low[s] = ++timer;
    while (!st.empty()) {
      Frame& f = st.back();
      auto adj = g.neighbors(f.v);
      if (f.next < adj.size()) {
        const Arc a = adj[f.next++];
        if (a.to == f.parent) continue;
        if (!disc[a.to]) {
          estack.push_back({f.v, a.to, a.w});
          disc[a.to] = low[a.to] = ++timer;
          st.push_back({a.to, f.v, 0});
        } else if (disc[a.to] < disc[f.v]) {
          estack.push_back({f.v, a.to, a.w});
          low[f.v] = std::min(low[f.v], disc[a.to]);
        }
        continue;
      }
      Frame done = f;
      st.pop_back();
      if (st.empty()) break;
      Vertex p = st.back().v;
      low[p] = std::min(low[p], low[done.v]);
      if (low[done.v] >= disc[p]) {
        std::vector<Edge> block;
        while (true) {
          Edge e = estack.back();
          estack.pop_back();
          block.push_back(e);
          if (e.u == p && e.v == done.v) break;
        }
        blocks.push_back(std::move(block));
      }
    }
  }
  return blocks;
}

struct Attachment {
  std::vector<Vertex> path;  // v_0 .. v_m
  Vertex anchor = 0;         // u, already present
  bool two_edge = false;     // true: both v_0 and v_m are joined to u
};

struct CactusComposition {
  Vertex start = 0;
  std::vector<Attachment> attachments;
};

inline CactusComposition cactus_composition(const WeightedGraph& g) {
  CactusComposition comp;
  if (g.size() == 0) return comp;
  auto blocks = biconnected_blocks(g);
  std::vector<std::vector<std::size_t>> at(g.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::set<Vertex> verts;
    for (const auto& e : blocks[b]) {
      verts.insert(e.u);
      verts.insert(e.v);
    }
    if (blocks[b].size() > 1 && blocks[b].size() != verts.size()) {
      throw NotCactus("a block with " + std::to_string(verts.size()) + " vertices and " +
                          std::to_string(blocks[b].size()) + " edges is not a cycle",
                      blocks[b]);
    }
    for (Vertex v : verts) at[v].push_back(b);
  }
  std::vector<char> used(blocks.size(), 0), present(g.size(), 0);
  std::vector<Vertex> queue{0};
  present[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex x = queue[qi];
    for (std::size_t b : at[x]) {
      if (used[b]) continue;
      used[b] = 1;
      const auto& block = blocks[b];
      Attachment att;
      att.anchor = x;
      if (block.size() == 1) {
        att.path = {block[0].u == x ? block[0].v : block[0].u};
      } else {
        std::map<Vertex, std::vector<Vertex>> adj;
        for (const auto& e : block) {
          adj[e.u].push_back(e.v);
          adj[e.v].push_back(e.u);
        }
        Vertex prev = x;
        Vertex cur = std::min(adj[x][0], adj[x][1]);
        while (cur != x) {
          att.path.push_back(cur);
          Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
          prev = cur;
          cur = nxt;
        }
        att.two_edge = true;
      }
      for (Vertex v : att.path) {
        present[v] = 1;
        queue.push_back(v);
      }
      comp.attachments.push_back(std::move(att));
    }
  }
  return comp;
}

inline bool is_cactus(const WeightedGraph& g) {
  try {
    cactus_composition(g);
    return true;
  } catch (const NotCactus&) {
    return false;
  }
}

/// Replays the composition and checks it reproduces the edge set of g.
inline bool replay_matches(const WeightedGraph& g, const CactusComposition& comp) {
  std::set<std::pair<Vertex, Vertex>> edges;
  std::vector<char> present(g.size(), 0);
  if (g.size() == 0) return comp.attachments.empty();
  present[comp.start] = 1;
  auto add = [&](Vertex a, Vertex b) {
    return edges.insert({std::min(a, b), std::max(a, b)}).second;
  };
  for (const auto& att : comp.attachments) {
    if (att.path.empty() || !present[att.anchor]) return false;
    for (Vertex v : att.path) {
      if (present[v]) return false;
      present[v] = 1;
    }
    if (!add(att.anchor, att.path.front())) return false;
    for (std::size_t i = 1; i < att.path.size(); ++i) {
      if (!add(att.path[i - 1], att.path[i])) return false;
    }
    if (att.two_edge && (att.path.size() < 2 || !add(att.path.back(), att.anchor))) return false;
  }
  if (std::find(present.begin(), present.end(), 0) != present.end()) return false;
  if (edges.size() != g.edge_count()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return edges.count({e.u, e.v}) == 1; });
}

/// Clusters have one or two centers; every member is within r = delta/4 of
/// its center set inside the cluster.
inline Partition cactus_scattering_partition(const WeightedGraph& g, double delta) {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  auto comp = cactus_composition(g);
  const double r = delta / 4;
  const std::size_t n = g.size();
  std::vector<std::size_t> cluster(n, 0);
  std::vector<double> din(n, 0.0);  // distance to the center set inside the cluster
  std::size_t next = 0;
  cluster[comp.start] = next++;

  auto w = [&](Vertex a, Vertex b) { return *g.edge_weight(a, b); };

  for (const auto& att : comp.attachments) {
    const Vertex u = att.anchor;
    const auto& P = att.path;
    const std::size_t m = P.size();
    if (!att.two_edge) {
      Vertex prev = u;
      for (Vertex v : P) {
        double d = din[prev] + w(prev, v);
        if (approx_le(d, r)) {
          cluster[v] = cluster[prev];
          din[v] = d;
        } else {
          cluster[v] = next++;
          din[v] = 0;
        }
        prev = v;
      }
      continue;
    }
    // pre[i]: length of u, v_0, ..., v_i; suf[i]: length of v_i, ..., v_{m-1}, u.
    std::vector<double> pre(m), suf(m);
    pre[0] = w(u, P[0]);
    for (std::size_t i = 1; i < m; ++i) pre[i] = pre[i - 1] + w(P[i - 1], P[i]);
    suf[m - 1] = w(P[m - 1], u);
    for (std::size_t i = m - 1; i-- > 0;) suf[i] = suf[i + 1] + w(P[i], P[i + 1]);
    auto between = [&](std::size_t a, std::size_t b) { return pre[b] - pre[a]; };

    std::vector<char> done(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      double d = din[u] + std::min(pre[i], suf[i]);
      if (approx_le(d, r)) {
        done[i] = 1;
        cluster[P[i]] = cluster[u];
        din[P[i]] = d;
      }
    }
    auto lo_it = std::find(done.begin(), done.end(), 0);
    if (lo_it == done.end()) continue;
    auto a = static_cast<long>(lo_it - done.begin());
    auto b = static_cast<long>(m) - 1;
    while (done[static_cast<std::size_t>(b)]) --b;
    auto at = [&](long i) { return P[static_cast<std::size_t>(i)]; };
    auto span = [&](long x, long y) {
      return between(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    };

    // Phase two: peel clusters off both ends while the gap exceeds 2r.
    while (a <= b && approx_lt(2 * r, span(a, b))) {
      const std::size_t ca = next++, cb = next++;
      long i = a;
      for (; i <= b && approx_le(span(a, i), r); ++i) {
        cluster[at(i)] = ca;
        din[at(i)] = span(a, i);
      }
      long j = b;
      for (; j >= i && approx_le(span(j, b), r); --j) {
        cluster[at(j)] = cb;
        din[at(j)] = span(j, b);
      }
      a = i;
      b = j;
    }
    if (a > b) continue;
    // Phase three: the rest joins a cluster centered at {t_a, t_b}.
    const std::size_t c = next++;
    for (long i = a; i <= b; ++i) {
      cluster[at(i)] = c;
      din[at(i)] = std::min(span(a, i), span(i, b));
    }
  }
  return Partition::from_labels(cluster, delta);
}

}  // namespace scatterkit
