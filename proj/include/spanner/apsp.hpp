#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "spanner/dijkstra.hpp"
#include "spanner/graph.hpp"

namespace spanner {

// Dense all-pairs table of shortest-path weights plus minimum hop counts over
// all minimum-weight paths. O(n^2) memory; meant for desk-scale instances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int32_t n)
      : n_(n), dist_(size_t(n) * size_t(n), kInf), hops_(size_t(n) * size_t(n), -1) {}

  int32_t n() const { return n_; }
  double dist(int32_t u, int32_t v) const { return dist_[size_t(u) * size_t(n_) + size_t(v)]; }
  int32_t hops(int32_t u, int32_t v) const { return hops_[size_t(u) * size_t(n_) + size_t(v)]; }

  double& dist_at(int32_t u, int32_t v) { return dist_[size_t(u) * size_t(n_) + size_t(v)]; }
  int32_t& hops_at(int32_t u, int32_t v) { return hops_[size_t(u) * size_t(n_) + size_t(v)]; }

 private:
  int32_t n_ = 0;
  std::vector<double> dist_;
  std::vector<int32_t> hops_;
};

namespace detail {

// Single-source variant tracking (dist, hops) lexicographically, so the hop
// entry is the fewest edges among minimum-weight paths.
inline void sssp_lex(const Graph& g, int32_t src, const EdgeMask* mask,
                     DistanceMatrix& out) {
  ++traversal_count();
  const int32_t n = g.n();
  std::vector<double> dist(size_t(n), kInf);
  std::vector<int32_t> hops(size_t(n), -1);
  struct Item {
    double d;
    int32_t h;
    int32_t v;
    bool operator>(const Item& o) const {
      if (d != o.d) return d > o.d;
      if (h != o.h) return h > o.h;
      return v > o.v;
    }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[size_t(src)] = 0.0;
  hops[size_t(src)] = 0;
  pq.push({0.0, 0, src});
  while (!pq.empty()) {
    Item it = pq.top();
    pq.pop();
    if (it.d > dist[size_t(it.v)] ||
        (it.d == dist[size_t(it.v)] && it.h > hops[size_t(it.v)]))
      continue;
    for (const HalfEdge& h : g.neighbors(it.v)) {
      if (mask && !(*mask)[size_t(h.edge)]) continue;
      double nd = it.d + g.weight(h.edge);
      int32_t nh = it.h + 1;
      size_t to = size_t(h.to);
      if (nd < dist[to] || (nd == dist[to] && nh < hops[to])) {
        dist[to] = nd;
        hops[to] = nh;
        pq.push({nd, nh, h.to});
      }
    }
  }
  for (int32_t v = 0; v < n; ++v) {
    out.dist_at(src, v) = dist[size_t(v)];
    out.hops_at(src, v) = std::max(hops[size_t(v)], 0);  // unreached pairs: hops 0
  }
}

inline void sssp_unit(const Graph& g, int32_t src, const EdgeMask* mask,
                      DistanceMatrix& out) {
  BfsResult b = bfs_depth_limited(g, src, g.n(), mask);
  for (int32_t v = 0; v < g.n(); ++v) {
    int32_t h = b.hops[size_t(v)];
    out.hops_at(src, v) = std::max(h, 0);  // unreached pairs: hops 0
    out.dist_at(src, v) = h < 0 ? kInf : double(h);
  }
}

}  // namespace detail

// All-pairs shortest paths of g, optionally restricted to edges in `mask`.
// On unweighted graphs this degrades to one BFS per source.
inline DistanceMatrix apsp(const Graph& g, const EdgeMask* mask = nullptr) {
  DistanceMatrix out(g.n());
  for (int32_t s = 0; s < g.n(); ++s) {
    if (g.weighted())
      detail::sssp_lex(g, s, mask, out);
    else
      detail::sssp_unit(g, s, mask, out);
  }
  return out;
}

}  // namespace spanner
