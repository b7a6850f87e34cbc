#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "spanner/errors.hpp"

namespace spanner {

struct Edge {
  int32_t u;
  int32_t v;
  double w;  // 1.0 on unweighted graphs
};

// Half-edge in the adjacency of some vertex: target plus the id of the
// undirected edge it belongs to.
struct HalfEdge {
  int32_t to;
  int32_t edge;
};

// Simple undirected graph, immutable after construction. Vertices are
// 0..n-1, edges carry positive weights; a single flag says whether weights
// are meaningful. Adjacency is CSR for cache-friendly traversal.
class Graph {
 public:
  Graph() = default;

  Graph(int32_t n, std::vector<Edge> edges, bool weighted)
      : n_(n), edges_(std::move(edges)), weighted_(weighted) {
    if (n < 0) throw GraphError("negative vertex count");
    std::unordered_set<uint64_t> seen;
    seen.reserve(edges_.size() * 2);
    for (auto& e : edges_) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw GraphError("edge endpoint out of range");
      if (e.u == e.v) throw GraphError("self loop");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!seen.insert(uint64_t(e.u) * uint64_t(n) + uint64_t(e.v)).second)
        throw GraphError("parallel edge");
      if (weighted_) {
        if (!(e.w > 0.0) || !std::isfinite(e.w))
          throw GraphError("non-positive edge weight");
      } else {
        e.w = 1.0;
      }
    }
    build_adjacency();
  }

  int32_t n() const { return n_; }
  int32_t m() const { return int32_t(edges_.size()); }
  bool weighted() const { return weighted_; }

  const Edge& edge(int32_t id) const { return edges_[size_t(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  double weight(int32_t id) const { return edges_[size_t(id)].w; }

  std::span<const HalfEdge> neighbors(int32_t v) const {
    return {adj_.data() + offsets_[size_t(v)],
            adj_.data() + offsets_[size_t(v) + 1]};
  }

  int32_t degree(int32_t v) const {
    return offsets_[size_t(v) + 1] - offsets_[size_t(v)];
  }

  double total_weight() const {
    double s = 0.0;
    for (const auto& e : edges_) s += e.w;
    return s;
  }

  // Same topology with the weighted flag cleared (all weights treated as 1).
  Graph without_weights() const {
    Graph g;
    g.n_ = n_;
    g.edges_ = edges_;
    for (auto& e : g.edges_) e.w = 1.0;
    g.weighted_ = false;
    g.offsets_ = offsets_;
    g.adj_ = adj_;
    return g;
  }

 private:
  void build_adjacency() {
    offsets_.assign(size_t(n_) + 1, 0);
    for (const auto& e : edges_) {
      ++offsets_[size_t(e.u) + 1];
      ++offsets_[size_t(e.v) + 1];
    }
    for (size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    adj_.resize(edges_.size() * 2);
    std::vector<int32_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (int32_t id = 0; id < m(); ++id) {
      const Edge& e = edges_[size_t(id)];
      adj_[size_t(cursor[size_t(e.u)]++)] = {e.v, id};
      adj_[size_t(cursor[size_t(e.v)]++)] = {e.u, id};
    }
  }

  int32_t n_ = 0;
  std::vector<Edge> edges_;
  bool weighted_ = false;
  std::vector<int32_t> offsets_;
  std::vector<HalfEdge> adj_;
};

// Byte mask over edge ids; 1 = edge present in the subgraph.
using EdgeMask = std::vector<uint8_t>;

// An edge subset of a fixed parent graph together with the stretch target it
// was built for. Does not own the parent.
class Spanner {
 public:
  Spanner() = default;
  Spanner(const Graph* parent, double alpha)
      : parent_(parent), alpha_(alpha), mask_(size_t(parent->m()), 0) {}

  static Spanner empty(const Graph& g, double alpha) { return Spanner(&g, alpha); }

  static Spanner full(const Graph& g, double alpha) {
    Spanner s(&g, alpha);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    s.size_ = g.m();
    return s;
  }

  const Graph& parent() const { return *parent_; }
  double alpha() const { return alpha_; }
  const EdgeMask& mask() const { return mask_; }

  bool contains(int32_t edge) const { return mask_[size_t(edge)] != 0; }

  void add(int32_t edge) {
    if (!mask_[size_t(edge)]) {
      mask_[size_t(edge)] = 1;
      ++size_;
    }
  }

  int32_t size() const { return size_; }

  std::vector<int32_t> edge_ids() const {
    std::vector<int32_t> ids;
    ids.reserve(size_t(size_));
    for (int32_t i = 0; i < int32_t(mask_.size()); ++i)
      if (mask_[size_t(i)]) ids.push_back(i);
    return ids;
  }

  double total_weight() const {
    double s = 0.0;
    for (int32_t i = 0; i < int32_t(mask_.size()); ++i)
      if (mask_[size_t(i)]) s += parent_->weight(i);
    return s;
  }

 private:
  const Graph* parent_ = nullptr;
  double alpha_ = 1.0;
  EdgeMask mask_;
  int32_t size_ = 0;
};

}  // namespace spanner
