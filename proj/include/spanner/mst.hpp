#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "spanner/graph.hpp"

namespace spanner {

class DisjointSets {
 public:
  explicit DisjointSets(int32_t n) : parent_(size_t(n)), rank_(size_t(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int32_t find(int32_t x) {
    while (parent_[size_t(x)] != x) {
      parent_[size_t(x)] = parent_[size_t(parent_[size_t(x)])];
      x = parent_[size_t(x)];
    }
    return x;
  }

  bool unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[size_t(a)] < rank_[size_t(b)]) std::swap(a, b);
    parent_[size_t(b)] = a;
    if (rank_[size_t(a)] == rank_[size_t(b)]) ++rank_[size_t(a)];
    return true;
  }

 private:
  std::vector<int32_t> parent_;
  std::vector<uint8_t> rank_;
};

struct Components {
  int32_t count = 0;
  std::vector<int32_t> label;  // component id per vertex, 0..count-1
};

inline Components components(const Graph& g, const EdgeMask* mask = nullptr) {
  DisjointSets ds(g.n());
  for (int32_t e = 0; e < g.m(); ++e) {
    if (mask && !(*mask)[size_t(e)]) continue;
    ds.unite(g.edge(e).u, g.edge(e).v);
  }
  Components c;
  c.label.assign(size_t(g.n()), -1);
  for (int32_t v = 0; v < g.n(); ++v) {
    int32_t r = ds.find(v);
    if (c.label[size_t(r)] < 0) c.label[size_t(r)] = c.count++;
    c.label[size_t(v)] = c.label[size_t(r)];
  }
  return c;
}

// Weight of a minimum spanning forest (Kruskal). Ties broken by edge id, which
// keeps the chosen forest deterministic; the weight is unique regardless.
inline double mst_weight(const Graph& g) {
  std::vector<int32_t> order(size_t(g.m()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) {
    double wa = g.weight(a), wb = g.weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  DisjointSets ds(g.n());
  double total = 0.0;
  for (int32_t e : order)
    if (ds.unite(g.edge(e).u, g.edge(e).v)) total += g.weight(e);
  return total;
}

}  // namespace spanner
