#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/densest_subgraph.hpp"
#include "spanner/graph.hpp"

namespace spanner {

// Densest star candidate rooted at `owner`: a subset of its neighborhood
// (w.r.t. currently uncovered edges) maximizing internal edge density.
struct DenseSubset {
  int32_t owner = -1;
  std::vector<std::pair<int32_t, int32_t>> members;  // (vertex, connecting edge id)
  std::vector<int32_t> induced_edges;                // uncovered edge ids inside members
  double density = 0.0;
};

namespace detail {

struct KpState {
  const Graph& g;
  std::vector<std::vector<HalfEdge>> uncov;  // uncovered adjacency, compacted lazily
  std::vector<uint8_t> uncovered;
  std::vector<int32_t> local_id;
  std::vector<int32_t> loc_stamp;
  int32_t stamp = 0;

  explicit KpState(const Graph& graph)
      : g(graph),
        uncovered(size_t(graph.m()), 1),
        local_id(size_t(graph.n()), -1),
        loc_stamp(size_t(graph.n()), -1) {
    uncov.resize(size_t(g.n()));
    for (int32_t v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      uncov[size_t(v)].assign(nb.begin(), nb.end());
    }
  }

  void compact(int32_t v) {
    auto& lst = uncov[size_t(v)];
    size_t out = 0;
    for (const HalfEdge& he : lst)
      if (uncovered[size_t(he.edge)]) lst[out++] = he;
    lst.resize(out);
  }

  DenseSubset densest_at(int32_t v, const MaxFlowOptions& opt) {
    compact(v);
    DenseSubset ds;
    ds.owner = v;
    const auto& nb = uncov[size_t(v)];
    if (nb.empty()) return ds;

    ++stamp;
    std::vector<std::pair<int32_t, int32_t>> view_edges;
    for (int32_t i = 0; i < int32_t(nb.size()); ++i) {
      local_id[size_t(nb[size_t(i)].to)] = i;
      loc_stamp[size_t(nb[size_t(i)].to)] = stamp;
    }
    std::vector<int32_t> view_eids;
    for (int32_t i = 0; i < int32_t(nb.size()); ++i) {
      int32_t u = nb[size_t(i)].to;
      compact(u);
      for (const HalfEdge& he : uncov[size_t(u)]) {
        if (he.to <= u) continue;  // each view edge once
        if (loc_stamp[size_t(he.to)] != stamp) continue;
        view_edges.push_back({i, local_id[size_t(he.to)]});
        view_eids.push_back(he.edge);
      }
    }

    DenseSubgraphResult r =
        max_density_subgraph(int32_t(nb.size()), view_edges, opt);
    ds.density = r.density;
    std::vector<uint8_t> chosen(nb.size(), 0);
    for (int32_t loc : r.members) {
      chosen[size_t(loc)] = 1;
      ds.members.push_back({nb[size_t(loc)].to, nb[size_t(loc)].edge});
    }
    for (size_t i = 0; i < view_edges.size(); ++i)
      if (chosen[size_t(view_edges[i].first)] && chosen[size_t(view_edges[i].second)])
        ds.induced_edges.push_back(view_eids[i]);
    return ds;
  }
};

}  // namespace detail

// 2-spanner construction for unweighted graphs: repeatedly take the globally
// densest neighborhood subset (density strictly above 1), add its star to the
// spanner, and drop the star plus the subset's internal edges from the
// uncovered set. Whatever stays uncovered at the end goes into the spanner.
//
// The per-vertex densities only ever decrease as edges get covered, so a lazy
// max-heap with dirty marks is exact: a clean top entry is the true maximum.
inline Spanner kortsarz_peleg(const Graph& g,
                              const Deadline& deadline = Deadline::never(),
                              const MaxFlowOptions& flow_opt = {}) {
  if (g.weighted()) throw IncompatibleConfig("kortsarz-peleg handles unweighted graphs only");
  Spanner h = Spanner::empty(g, 2.0);
  detail::KpState st(g);

  std::vector<double> density(size_t(g.n()), 0.0);
  std::vector<uint8_t> dirty(size_t(g.n()), 0);
  std::vector<DenseSubset> subset(size_t(g.n()));

  struct Entry {
    double d;
    int32_t v;
    bool operator<(const Entry& o) const {
      if (d != o.d) return d < o.d;
      return v > o.v;  // max-heap: ties resolve toward the smaller vertex id
    }
  };
  std::priority_queue<Entry> heap;

  // Seed with the upper bound (deg-1)/2 and let pops trigger the exact flow
  // computation; works because a subset of j neighbors has at most C(j,2)
  // internal edges and densities never increase.
  for (int32_t v = 0; v < g.n(); ++v) {
    density[size_t(v)] = (double(g.degree(v)) - 1.0) / 2.0;
    dirty[size_t(v)] = 1;
    heap.push({density[size_t(v)], v});
  }

  std::vector<int32_t> removed;
  while (!heap.empty()) {
    deadline.check();
    auto [d, w] = heap.top();
    heap.pop();
    if (dirty[size_t(w)]) {
      subset[size_t(w)] = st.densest_at(w, flow_opt);
      density[size_t(w)] = subset[size_t(w)].density;
      dirty[size_t(w)] = 0;
      heap.push({density[size_t(w)], w});
      continue;
    }
    if (d != density[size_t(w)]) continue;  // superseded entry
    if (d <= 1.0) break;

    const DenseSubset& ds = subset[size_t(w)];
    removed.clear();
    for (const auto& [u, eid] : ds.members) {
      h.add(eid);
      removed.push_back(eid);
    }
    for (int32_t eid : ds.induced_edges) removed.push_back(eid);
    for (int32_t eid : removed) st.uncovered[size_t(eid)] = 0;

    // Everything adjacent to an endpoint of a removed edge may lose density.
    for (int32_t eid : removed) {
      const Edge& e = g.edge(eid);
      for (int32_t x : {e.u, e.v}) {
        if (!dirty[size_t(x)]) {
          dirty[size_t(x)] = 1;
          heap.push({density[size_t(x)], x});
        }
        for (const HalfEdge& he : st.uncov[size_t(x)]) {
          if (!st.uncovered[size_t(he.edge)]) continue;
          if (!dirty[size_t(he.to)]) {
            dirty[size_t(he.to)] = 1;
            heap.push({density[size_t(he.to)], he.to});
          }
        }
      }
    }
  }

  for (int32_t e = 0; e < g.m(); ++e)
    if (st.uncovered[size_t(e)]) h.add(e);
  return h;
}

}  // namespace spanner
