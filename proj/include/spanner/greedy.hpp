#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/dijkstra.hpp"
#include "spanner/graph.hpp"
#include "spanner/rng.hpp"

namespace spanner {

// Edge processing order on unweighted graphs. Weighted graphs always sort by
// weight (stable on edge id), which is what makes the greedy bound work.
enum class EdgeOrder { input, random, bfs };

struct GreedyConfig {
  double alpha = 3.0;
  EdgeOrder order = EdgeOrder::input;
  uint64_t seed = 0;  // used only for EdgeOrder::random
};

namespace detail {

inline std::vector<int32_t> bfs_edge_order(const Graph& g) {
  std::vector<int32_t> order;
  order.reserve(size_t(g.m()));
  std::vector<uint8_t> v_seen(size_t(g.n()), 0), e_seen(size_t(g.m()), 0);
  std::vector<int32_t> queue;
  for (int32_t root = 0; root < g.n(); ++root) {
    if (v_seen[size_t(root)]) continue;
    v_seen[size_t(root)] = 1;
    queue.assign(1, root);
    for (size_t head = 0; head < queue.size(); ++head) {
      int32_t u = queue[size_t(head)];
      for (const HalfEdge& h : g.neighbors(u)) {
        if (!e_seen[size_t(h.edge)]) {
          e_seen[size_t(h.edge)] = 1;
          order.push_back(h.edge);
        }
        if (!v_seen[size_t(h.to)]) {
          v_seen[size_t(h.to)] = 1;
          queue.push_back(h.to);
        }
      }
    }
  }
  return order;
}

}  // namespace detail

// Greedy multiplicative spanner: scan edges (ascending weight when weighted),
// keep an edge iff the spanner built so far has no u-v path of weight at most
// alpha * w(e). Works for any real alpha >= 1 and both weight modes.
inline Spanner greedy_spanner(const Graph& g, const GreedyConfig& cfg,
                              const Deadline& deadline = Deadline::never()) {
  if (cfg.alpha < 1.0) throw IncompatibleConfig("greedy needs alpha >= 1");
  std::vector<int32_t> order(size_t(g.m()));
  std::iota(order.begin(), order.end(), 0);
  if (g.weighted()) {
    std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
      double wa = g.weight(a), wb = g.weight(b);
      if (wa != wb) return wa < wb;
      return a < b;
    });
  } else if (cfg.order == EdgeOrder::random) {
    Rng rng(cfg.seed);
    for (size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[size_t(rng.below(i))]);
  } else if (cfg.order == EdgeOrder::bfs) {
    order = detail::bfs_edge_order(g);
  }

  Spanner h = Spanner::empty(g, cfg.alpha);
  for (int32_t e : order) {
    deadline.check();
    const Edge& ed = g.edge(e);
    double bound = cfg.alpha * ed.w;
    DijkstraResult r = dijkstra_bounded(g, ed.u, bound, &h.mask(), ed.v);
    if (r.dist[size_t(ed.v)] > bound) h.add(e);
  }
  return h;
}

}  // namespace spanner
