#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "spanner/errors.hpp"
#include "spanner/graph.hpp"
#include "spanner/rng.hpp"

namespace spanner {

// G(n, M) spec: M = round(rel_density * C(n,2)), ties to even.
struct ErSpec {
  int32_t n = 0;
  double rel_density = 0.5;  // in (0, 1)
  bool weighted = false;
  uint64_t seed = 0;
};

inline int64_t er_edge_count(int32_t n, double rel_density) {
  double pairs = 0.5 * double(n) * double(n - 1);
  return int64_t(std::nearbyint(rel_density * pairs));
}

// Exactly M distinct edges sampled uniformly without replacement (Floyd's
// algorithm over triangular pair indices). Weights are uniform integers in
// [1, n], drawn in canonical edge order so the graph is a pure function of
// the spec.
inline Graph gen_er(const ErSpec& spec) {
  if (spec.n < 0 || !(spec.rel_density > 0.0) || !(spec.rel_density < 1.0))
    throw IncompatibleConfig("infeasible instance spec");
  int64_t total = int64_t(spec.n) * (spec.n - 1) / 2;
  int64_t m = er_edge_count(spec.n, spec.rel_density);
  if (m > total) throw IncompatibleConfig("infeasible instance spec");

  Rng rng(spec.seed);
  std::unordered_set<int64_t> picked;
  picked.reserve(size_t(m) * 2);
  for (int64_t j = total - m; j < total; ++j) {
    int64_t r = int64_t(rng.below(uint64_t(j) + 1));
    if (!picked.insert(r).second) picked.insert(j);
  }
  std::vector<int64_t> codes(picked.begin(), picked.end());
  std::sort(codes.begin(), codes.end());

  // code = offset(u) + (v - u - 1) with offset(u) = #pairs whose min is < u
  std::vector<Edge> edges;
  edges.reserve(codes.size());
  int32_t u = 0;
  int64_t off = 0, row = spec.n - 1;
  for (int64_t code : codes) {
    while (code >= off + row) {
      off += row;
      --row;
      ++u;
    }
    int32_t v = u + 1 + int32_t(code - off);
    double w = spec.weighted ? double(1 + rng.below(uint64_t(spec.n))) : 1.0;
    edges.push_back({u, v, w});
  }
  return Graph(spec.n, edges, spec.weighted);
}

// Uniform random attachment tree: vertex v links to a uniform earlier vertex.
inline Graph gen_random_tree(int32_t n, bool weighted, uint64_t seed) {
  if (n < 1) throw IncompatibleConfig("tree needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(size_t(n) - 1);
  for (int32_t v = 1; v < n; ++v) {
    int32_t u = int32_t(rng.below(uint64_t(v)));
    double w = weighted ? double(1 + rng.below(uint64_t(n))) : 1.0;
    edges.push_back({u, v, w});
  }
  return Graph(n, edges, weighted);
}

inline Graph gen_cycle(int32_t n, bool weighted, uint64_t seed) {
  if (n < 3) throw IncompatibleConfig("cycle needs n >= 3");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(size_t(n));
  for (int32_t v = 0; v < n; ++v) {
    double w = weighted ? double(1 + rng.below(uint64_t(n))) : 1.0;
    edges.push_back({v, (v + 1) % n, w});
  }
  return Graph(n, edges, weighted);
}

inline Graph gen_complete(int32_t n, bool weighted, uint64_t seed) {
  if (n < 1) throw IncompatibleConfig("complete graph needs n >= 1");
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(size_t(n) * size_t(n - 1) / 2);
  for (int32_t u = 0; u < n; ++u) {
    for (int32_t v = u + 1; v < n; ++v) {
      double w = weighted ? double(1 + rng.below(uint64_t(n))) : 1.0;
      edges.push_back({u, v, w});
    }
  }
  return Graph(n, edges, weighted);
}

}  // namespace spanner
