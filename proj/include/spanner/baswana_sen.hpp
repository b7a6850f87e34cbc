#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/graph.hpp"
#include "spanner/rng.hpp"

namespace spanner {

struct BsConfig {
  int32_t alpha = 3;  // odd, alpha = 2k-1
  uint64_t seed = 0;
};

// Per-round snapshot for inspection in tests.
struct ClusteringRound {
  std::vector<int32_t> center;          // center id per vertex, -1 = unclustered
  std::vector<int32_t> sampled_centers; // centers that survived the coin flips
};

// Randomized clustering spanner for odd stretch 2k-1. Never computes
// distances: k-1 rounds of cluster sampling followed by a vertex-cluster
// joining phase. Expected size O(k * n^(1+1/k)).
inline Spanner baswana_sen(const Graph& g, const BsConfig& cfg,
                           const Deadline& deadline = Deadline::never(),
                           std::vector<ClusteringRound>* trace = nullptr) {
  if (cfg.alpha < 1 || cfg.alpha % 2 == 0)
    throw IncompatibleConfig("baswana-sen needs odd alpha >= 1");
  const int32_t k = (cfg.alpha + 1) / 2;
  const int32_t n = g.n();
  Spanner h = Spanner::empty(g, double(cfg.alpha));
  if (n == 0) return h;

  Rng rng(cfg.seed);
  const double p = std::pow(double(n), -1.0 / double(k));

  std::vector<int32_t> center(static_cast<size_t>(n));
  for (int32_t v = 0; v < n; ++v) center[size_t(v)] = v;
  std::vector<uint8_t> edge_alive(size_t(g.m()), 1);
  std::vector<std::vector<HalfEdge>> live(static_cast<size_t>(n));
  for (int32_t v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    live[size_t(v)].assign(nb.begin(), nb.end());
  }

  // Scratch keyed by cluster center, invalidated via stamps instead of clears.
  std::vector<int32_t> stamp(size_t(n), -1), kill_stamp(size_t(n), -1);
  std::vector<double> best_w(static_cast<size_t>(n));
  std::vector<int32_t> best_to(static_cast<size_t>(n));
  std::vector<int32_t> best_eid(static_cast<size_t>(n)), touched;
  std::vector<uint8_t> sampled(static_cast<size_t>(n));
  int32_t round_stamp = 0;

  for (int32_t round = 0; round < k - 1; ++round) {
    deadline.check();
    // Sample each live cluster independently, in ascending center order.
    std::vector<uint8_t> is_center(size_t(n), 0);
    for (int32_t v = 0; v < n; ++v)
      if (center[size_t(v)] >= 0) is_center[size_t(center[size_t(v)])] = 1;
    std::vector<int32_t> sampled_list;
    for (int32_t c = 0; c < n; ++c) {
      if (!is_center[size_t(c)]) continue;
      sampled[size_t(c)] = rng.bernoulli(p) ? 1 : 0;
      if (sampled[size_t(c)]) sampled_list.push_back(c);
    }

    std::vector<int32_t> new_center = center;
    for (int32_t v = 0; v < n; ++v) {
      int32_t cv = center[size_t(v)];
      if (cv < 0) continue;             // discarded in an earlier round
      if (sampled[size_t(cv)]) continue;  // cluster survives, v stays put

      // Group v's live edges by adjacent cluster, keeping the cheapest edge
      // per cluster (ties toward the smaller neighbor id).
      ++round_stamp;
      touched.clear();
      for (const HalfEdge& he : live[size_t(v)]) {
        if (!edge_alive[size_t(he.edge)]) continue;
        int32_t cc = center[size_t(he.to)];
        double w = g.weight(he.edge);
        if (stamp[size_t(cc)] != round_stamp) {
          stamp[size_t(cc)] = round_stamp;
          best_w[size_t(cc)] = w;
          best_to[size_t(cc)] = he.to;
          best_eid[size_t(cc)] = he.edge;
          touched.push_back(cc);
        } else if (w < best_w[size_t(cc)] ||
                   (w == best_w[size_t(cc)] && he.to < best_to[size_t(cc)])) {
          best_w[size_t(cc)] = w;
          best_to[size_t(cc)] = he.to;
          best_eid[size_t(cc)] = he.edge;
        }
      }

      int32_t join_cluster = -1;
      for (int32_t cc : touched) {
        if (!sampled[size_t(cc)]) continue;
        if (join_cluster < 0 || best_w[size_t(cc)] < best_w[size_t(join_cluster)] ||
            (best_w[size_t(cc)] == best_w[size_t(join_cluster)] &&
             best_to[size_t(cc)] < best_to[size_t(join_cluster)]))
          join_cluster = cc;
      }

      if (join_cluster < 0) {
        // No sampled neighbor cluster: keep one cheapest edge per adjacent
        // cluster and drop out of the clustering with all edges discarded.
        for (int32_t cc : touched) {
          h.add(best_eid[size_t(cc)]);
          kill_stamp[size_t(cc)] = round_stamp;
        }
        new_center[size_t(v)] = -1;
      } else {
        double wj = best_w[size_t(join_cluster)];
        h.add(best_eid[size_t(join_cluster)]);
        new_center[size_t(v)] = join_cluster;
        kill_stamp[size_t(join_cluster)] = round_stamp;
        for (int32_t cc : touched) {
          if (cc == join_cluster) continue;
          if (best_w[size_t(cc)] < wj) {
            h.add(best_eid[size_t(cc)]);
            kill_stamp[size_t(cc)] = round_stamp;
          }
        }
      }
      for (const HalfEdge& he : live[size_t(v)]) {
        if (!edge_alive[size_t(he.edge)]) continue;
        int32_t cc = center[size_t(he.to)];
        if (kill_stamp[size_t(cc)] == round_stamp) edge_alive[size_t(he.edge)] = 0;
      }
    }

    center.swap(new_center);
    // Edges inside one cluster are settled; drop them and compact.
    for (int32_t e = 0; e < g.m(); ++e) {
      if (!edge_alive[size_t(e)]) continue;
      const Edge& ed = g.edge(e);
      if (center[size_t(ed.u)] < 0 || center[size_t(ed.v)] < 0) {
        edge_alive[size_t(e)] = 0;  // endpoint dropped out, edges were killed
      } else if (center[size_t(ed.u)] == center[size_t(ed.v)]) {
        edge_alive[size_t(e)] = 0;
      }
    }
    for (int32_t v = 0; v < n; ++v) {
      auto& lst = live[size_t(v)];
      size_t out = 0;
      for (const HalfEdge& he : lst)
        if (edge_alive[size_t(he.edge)]) lst[out++] = he;
      lst.resize(out);
    }

    if (trace) trace->push_back({center, sampled_list});
  }

  // Joining phase: every vertex keeps one cheapest edge to each adjacent
  // surviving cluster.
  for (int32_t v = 0; v < n; ++v) {
    deadline.check();
    ++round_stamp;
    for (const HalfEdge& he : live[size_t(v)]) {
      if (!edge_alive[size_t(he.edge)]) continue;
      int32_t cc = center[size_t(he.to)];
      double w = g.weight(he.edge);
      if (stamp[size_t(cc)] != round_stamp) {
        stamp[size_t(cc)] = round_stamp;
        best_w[size_t(cc)] = w;
        best_to[size_t(cc)] = he.to;
        best_eid[size_t(cc)] = he.edge;
      } else if (w < best_w[size_t(cc)] ||
                 (w == best_w[size_t(cc)] && he.to < best_to[size_t(cc)])) {
        best_w[size_t(cc)] = w;
        best_to[size_t(cc)] = he.to;
        best_eid[size_t(cc)] = he.edge;
      }
    }
    for (const HalfEdge& he : live[size_t(v)]) {
      if (!edge_alive[size_t(he.edge)]) continue;
      int32_t cc = center[size_t(he.to)];
      if (stamp[size_t(cc)] == round_stamp && best_eid[size_t(cc)] >= 0) {
        h.add(best_eid[size_t(cc)]);
        best_eid[size_t(cc)] = -1;  // one edge per (v, cluster)
      }
    }
  }
  return h;
}

}  // namespace spanner
