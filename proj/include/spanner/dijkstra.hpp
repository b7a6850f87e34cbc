#pragma once

#include <cstdint>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "spanner/graph.hpp"

namespace spanner {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Global count of graph traversals started (Dijkstra/BFS). Test hook: lets a
// suite assert that an algorithm performed no distance computations at all.
inline uint64_t& traversal_count() {
  static uint64_t count = 0;
  return count;
}

struct DijkstraResult {
  std::vector<double> dist;       // kInf if unreached or beyond bound
  std::vector<int32_t> pred_edge; // edge into each settled vertex, -1 at src/unreached
};

// Dijkstra from src, exploring only vertices at distance <= bound. If mask is
// given, only edges with mask[e] != 0 are usable. If target >= 0 the search
// stops as soon as target is settled. Distances beyond the bound stay kInf.
inline DijkstraResult dijkstra_bounded(const Graph& g, int32_t src,
                                       double bound = kInf,
                                       const EdgeMask* mask = nullptr,
                                       int32_t target = -1) {
  ++traversal_count();
  DijkstraResult r;
  r.dist.assign(size_t(g.n()), kInf);
  r.pred_edge.assign(size_t(g.n()), -1);
  using Item = std::pair<double, int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  r.dist[size_t(src)] = 0.0;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > r.dist[size_t(u)]) continue;  // stale entry
    if (u == target) break;
    for (const HalfEdge& h : g.neighbors(u)) {
      if (mask && !(*mask)[size_t(h.edge)]) continue;
      double nd = d + g.weight(h.edge);
      if (nd > bound) continue;
      if (nd < r.dist[size_t(h.to)]) {
        r.dist[size_t(h.to)] = nd;
        r.pred_edge[size_t(h.to)] = h.edge;
        pq.push({nd, h.to});
      }
    }
  }
  return r;
}

struct BfsResult {
  std::vector<int32_t> hops;        // -1 if unreached within the depth limit
  std::vector<int32_t> first_edge;  // first edge leaving src on the path, -1 at src/unreached
};

// Breadth-first search from src up to `depth` hops (inclusive).
inline BfsResult bfs_depth_limited(const Graph& g, int32_t src, int32_t depth,
                                   const EdgeMask* mask = nullptr) {
  ++traversal_count();
  BfsResult r;
  r.hops.assign(size_t(g.n()), -1);
  r.first_edge.assign(size_t(g.n()), -1);
  std::vector<int32_t> frontier{src}, next;
  r.hops[size_t(src)] = 0;
  for (int32_t level = 0; level < depth && !frontier.empty(); ++level) {
    next.clear();
    for (int32_t u : frontier) {
      for (const HalfEdge& h : g.neighbors(u)) {
        if (mask && !(*mask)[size_t(h.edge)]) continue;
        if (r.hops[size_t(h.to)] >= 0) continue;
        r.hops[size_t(h.to)] = level + 1;
        r.first_edge[size_t(h.to)] = level == 0 ? h.edge : r.first_edge[size_t(u)];
        next.push_back(h.to);
      }
    }
    frontier.swap(next);
  }
  return r;
}

}  // namespace spanner
