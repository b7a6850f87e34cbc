#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <span>
#include <unordered_set>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/dijkstra.hpp"
#include "spanner/graph.hpp"

namespace spanner {

struct Arc {
  int32_t u;
  int32_t v;
  double w;
};

struct HalfArc {
  int32_t to;    // head for out-adjacency, tail for in-adjacency
  int32_t arc;
};

// Directed graph with CSR adjacency in both orientations.
class DiGraph {
 public:
  DiGraph() = default;

  DiGraph(int32_t n, std::vector<Arc> arcs, bool weighted)
      : n_(n), arcs_(std::move(arcs)), weighted_(weighted) {
    if (n < 0) throw GraphError("negative vertex count");
    std::unordered_set<uint64_t> seen;
    seen.reserve(arcs_.size() * 2);
    for (auto& a : arcs_) {
      if (a.u < 0 || a.u >= n || a.v < 0 || a.v >= n)
        throw GraphError("arc endpoint out of range");
      if (a.u == a.v) throw GraphError("self loop");
      if (!seen.insert(uint64_t(a.u) * uint64_t(n) + uint64_t(a.v)).second)
        throw GraphError("parallel arc");
      if (weighted_) {
        if (!(a.w > 0.0)) throw GraphError("non-positive arc weight");
      } else {
        a.w = 1.0;
      }
    }
    build(out_off_, out_, true);
    build(in_off_, in_, false);
  }

  // Both orientations of every edge; arc ids 2e and 2e+1 for edge e.
  static DiGraph from_undirected(const Graph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(size_t(g.m()) * 2);
    for (int32_t e = 0; e < g.m(); ++e) {
      const Edge& ed = g.edge(e);
      arcs.push_back({ed.u, ed.v, ed.w});
      arcs.push_back({ed.v, ed.u, ed.w});
    }
    return DiGraph(g.n(), std::move(arcs), g.weighted());
  }

  int32_t n() const { return n_; }
  int32_t m() const { return int32_t(arcs_.size()); }
  bool weighted() const { return weighted_; }
  const Arc& arc(int32_t id) const { return arcs_[size_t(id)]; }
  double weight(int32_t id) const { return arcs_[size_t(id)].w; }

  std::span<const HalfArc> out(int32_t v) const {
    return {out_.data() + out_off_[size_t(v)], out_.data() + out_off_[size_t(v) + 1]};
  }
  std::span<const HalfArc> in(int32_t v) const {
    return {in_.data() + in_off_[size_t(v)], in_.data() + in_off_[size_t(v) + 1]};
  }

 private:
  void build(std::vector<int32_t>& off, std::vector<HalfArc>& adj, bool forward) {
    off.assign(size_t(n_) + 1, 0);
    for (const Arc& a : arcs_) ++off[size_t(forward ? a.u : a.v) + 1];
    for (size_t i = 1; i < off.size(); ++i) off[i] += off[i - 1];
    adj.resize(arcs_.size());
    std::vector<int32_t> cursor(off.begin(), off.end() - 1);
    for (int32_t id = 0; id < m(); ++id) {
      const Arc& a = arcs_[size_t(id)];
      if (forward)
        adj[size_t(cursor[size_t(a.u)]++)] = {a.v, id};
      else
        adj[size_t(cursor[size_t(a.v)]++)] = {a.u, id};
    }
  }

  int32_t n_ = 0;
  std::vector<Arc> arcs_;
  bool weighted_ = false;
  std::vector<int32_t> out_off_, in_off_;
  std::vector<HalfArc> out_, in_;
};

using ArcMask = std::vector<uint8_t>;

// Bounded Dijkstra over out-arcs (or in-arcs when forward = false, giving
// distances TO src). Arcs with mask[a] == 0 are unusable if a mask is given.
// Stops once `target` is settled.
inline std::vector<double> arc_dijkstra(const DiGraph& g, int32_t src, bool forward,
                                        double bound = kInf,
                                        const ArcMask* mask = nullptr,
                                        int32_t target = -1,
                                        std::vector<int32_t>* pred = nullptr) {
  ++traversal_count();
  std::vector<double> dist(size_t(g.n()), kInf);
  if (pred) pred->assign(size_t(g.n()), -1);
  using Item = std::pair<double, int32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[size_t(src)] = 0.0;
  pq.push({0.0, src});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[size_t(u)]) continue;
    if (u == target) break;
    auto adj = forward ? g.out(u) : g.in(u);
    for (const HalfArc& h : adj) {
      if (mask && !(*mask)[size_t(h.arc)]) continue;
      double nd = d + g.weight(h.arc);
      if (nd > bound) continue;
      if (nd < dist[size_t(h.to)]) {
        dist[size_t(h.to)] = nd;
        if (pred) (*pred)[size_t(h.to)] = h.arc;
        pq.push({nd, h.to});
      }
    }
  }
  return dist;
}

// Shortest-path trees in both orientations from every root. Memory O(n^2).
class Arborescences {
 public:
  explicit Arborescences(const DiGraph& g, const Deadline& deadline = Deadline::never())
      : n_(g.n()) {
    size_t nn = size_t(n_) * size_t(n_);
    dout_.resize(nn);
    din_.resize(nn);
    pout_.resize(nn);
    pin_.resize(nn);
    std::vector<int32_t> pred;
    for (int32_t r = 0; r < n_; ++r) {
      deadline.check();
      std::vector<double> d = arc_dijkstra(g, r, true, kInf, nullptr, -1, &pred);
      std::copy(d.begin(), d.end(), dout_.begin() + ptrdiff_t(size_t(r) * size_t(n_)));
      std::copy(pred.begin(), pred.end(), pout_.begin() + ptrdiff_t(size_t(r) * size_t(n_)));
      d = arc_dijkstra(g, r, false, kInf, nullptr, -1, &pred);
      std::copy(d.begin(), d.end(), din_.begin() + ptrdiff_t(size_t(r) * size_t(n_)));
      std::copy(pred.begin(), pred.end(), pin_.begin() + ptrdiff_t(size_t(r) * size_t(n_)));
    }
  }

  int32_t n() const { return n_; }
  // distance r -> x and the last arc into x on that path
  double dout(int32_t r, int32_t x) const { return dout_[size_t(r) * size_t(n_) + size_t(x)]; }
  int32_t pout(int32_t r, int32_t x) const { return pout_[size_t(r) * size_t(n_) + size_t(x)]; }
  // distance x -> r and the first arc leaving x on that path
  double din(int32_t r, int32_t x) const { return din_[size_t(r) * size_t(n_) + size_t(x)]; }
  int32_t pin(int32_t r, int32_t x) const { return pin_[size_t(r) * size_t(n_) + size_t(x)]; }

 private:
  int32_t n_ = 0;
  std::vector<double> dout_, din_;
  std::vector<int32_t> pout_, pin_;
};

}  // namespace spanner
