#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/digraph.hpp"
#include "spanner/errors.hpp"
#include "spanner/graph.hpp"
#include "spanner/lp.hpp"
#include "spanner/rng.hpp"

namespace spanner {

struct BermanConfig {
  double alpha = 3.0;
  uint64_t seed = 0;
  int32_t max_rounds = 200;       // cutting-plane iteration cap
  double budget_fraction = 0.5;   // share of remaining wall budget for the LP loop
};

// Arc set whose removal from the graph kills every s-t path of length
// <= alpha * d(s,t), for the target arc (s,t).
struct Antispanner {
  int32_t for_arc = -1;
  std::vector<int32_t> arcs;
  bool minimal = false;
};

namespace detail {

// Distance comparisons share one slack so borderline paths count as short.
inline bool leq_tol(double x, double y) { return x <= y * (1.0 + 1e-12) + 1e-12; }

inline void add_arborescence_arcs(const Arborescences& arbs, int32_t r, ArcMask& mask) {
  for (int32_t x = 0; x < arbs.n(); ++x) {
    int32_t a = arbs.pout(r, x);
    if (a >= 0) mask[size_t(a)] = 1;
    a = arbs.pin(r, x);
    if (a >= 0) mask[size_t(a)] = 1;
  }
}

}  // namespace detail

// Arc (s,t) is thick iff its local graph {x : d(s,x) + d(x,t) <= alpha*d(s,t)}
// has at least sqrt(n) vertices.
inline std::vector<uint8_t> classify_arcs(const DiGraph& g, const Arborescences& arbs,
                                          double alpha) {
  std::vector<uint8_t> thick(size_t(g.m()), 0);
  double threshold = std::sqrt(double(g.n())) - 1e-9;
  for (int32_t a = 0; a < g.m(); ++a) {
    const Arc& arc = g.arc(a);
    double budget = alpha * arbs.dout(arc.u, arc.v);
    int32_t count = 0;
    for (int32_t x = 0; x < g.n(); ++x)
      if (detail::leq_tol(arbs.dout(arc.u, x) + arbs.din(arc.v, x), budget)) ++count;
    thick[size_t(a)] = double(count) >= threshold;
  }
  return thick;
}

// ceil(3 sqrt(n) ln n) roots with replacement; each contributes every
// predecessor arc of its in- and out-arborescence. Covers thick arcs whp.
inline ArcMask sample_thick_cover(const DiGraph& g, const Arborescences& arbs,
                                  uint64_t seed) {
  ArcMask mask(size_t(g.m()), 0);
  if (g.n() < 2) return mask;
  int64_t count = int64_t(std::ceil(3.0 * std::sqrt(double(g.n())) * std::log(double(g.n()))));
  Rng rng(seed);
  for (int64_t i = 0; i < count; ++i)
    detail::add_arborescence_arcs(arbs, int32_t(rng.below(uint64_t(g.n()))), mask);
  return mask;
}

// True iff R alone already provides an s-t path of length <= alpha * d_st.
inline bool is_settled(const DiGraph& g, const ArcMask& R, int32_t arc_id, double alpha,
                       double d_st) {
  const Arc& a = g.arc(arc_id);
  double bound = alpha * d_st * (1.0 + 1e-12) + 1e-12;
  auto dist = arc_dijkstra(g, a.u, true, bound, &R, a.v);
  return dist[size_t(a.v)] <= bound;
}

// A = E^{s,t} \ R, then one greedy minimization pass in ascending arc order:
// arc b leaves A exactly when the kept side plus b still has no short s-t
// path. Settledness is monotone in the kept side, so one pass is minimal.
inline Antispanner build_min_antispanner(const DiGraph& g, const Arborescences& arbs,
                                         const ArcMask& R, int32_t arc_id, double alpha) {
  const Arc& target = g.arc(arc_id);
  int32_t s = target.u, t = target.v;
  double budget = alpha * arbs.dout(s, t);
  double bound = budget * (1.0 + 1e-12) + 1e-12;

  // every path of length <= budget runs entirely inside E^{s,t}
  std::vector<int32_t> members;
  ArcMask kept(size_t(g.m()), 0);
  for (int32_t b = 0; b < g.m(); ++b) {
    const Arc& arc = g.arc(b);
    if (!detail::leq_tol(arbs.dout(s, arc.u) + arc.w + arbs.din(t, arc.v), budget)) continue;
    if (R[size_t(b)])
      kept[size_t(b)] = 1;
    else
      members.push_back(b);
  }
  if (arc_dijkstra(g, s, true, bound, &kept, t)[size_t(t)] <= bound)
    throw IncompatibleConfig("antispanner requested for a settled arc");

  Antispanner out;
  out.for_arc = arc_id;
  for (int32_t b : members) {
    kept[size_t(b)] = 1;  // try handing b back to the graph
    if (arc_dijkstra(g, s, true, bound, &kept, t)[size_t(t)] <= bound) {
      kept[size_t(b)] = 0;  // b is load-bearing: keep it in the antispanner
      out.arcs.push_back(b);
    }
  }
  out.minimal = true;
  return out;
}

// Cutting-plane core over the bidirected instance. Returns the kept arc set;
// a final safety pass patches any arc that is still unsettled (possible after
// budget exhaustion) with one shortest path, so the result is always valid.
inline ArcMask berman_spanner_arcs(const DiGraph& g, const BermanConfig& cfg,
                                   const Deadline& deadline = Deadline::never()) {
  if (cfg.alpha < 1.0) throw IncompatibleConfig("stretch must be at least 1");
  deadline.check();
  Arborescences arbs(g, deadline);
  std::vector<uint8_t> thick = classify_arcs(g, arbs, cfg.alpha);
  ArcMask cover = sample_thick_cover(g, arbs, derive_seed(cfg.seed, hash_str("cover")));

  // Thin arcs grouped by tail so each settle scan is one Dijkstra per source.
  std::vector<std::vector<int32_t>> thin_by_src(size_t(g.n()));
  for (int32_t a = 0; a < g.m(); ++a)
    if (!thick[size_t(a)]) thin_by_src[size_t(g.arc(a).u)].push_back(a);

  Deadline soft = deadline.armed()
                      ? Deadline::after_seconds(deadline.remaining_seconds() * cfg.budget_fraction)
                      : Deadline::never();
  Rng round_rng(derive_seed(cfg.seed, hash_str("round")));
  double scale = std::sqrt(double(g.n())) * std::log(double(std::max(g.n(), 2)));

  LpProblem pool(g.m());
  ArcMask candidate = cover;
  std::vector<double> dist;
  try {
    for (int32_t round = 0; round < cfg.max_rounds; ++round) {
      deadline.check();
      if (soft.expired()) break;

      candidate = cover;
      if (!pool.rows().empty()) {
        FractionalSolution sol = lp_solve(pool, soft);
        for (int32_t a = 0; a < g.m(); ++a) {
          double p = std::min(1.0, sol.x[size_t(a)] * scale);
          if (p > 0.0 && round_rng.bernoulli(p)) candidate[size_t(a)] = 1;
        }
      }

      int64_t violations = 0;
      for (int32_t s = 0; s < g.n(); ++s) {
        if (thin_by_src[size_t(s)].empty()) continue;
        soft.check();
        deadline.check();
        dist = arc_dijkstra(g, s, true, kInf, &candidate);
        for (int32_t a : thin_by_src[size_t(s)]) {
          int32_t t = g.arc(a).v;
          if (detail::leq_tol(dist[size_t(t)], cfg.alpha * arbs.dout(s, t))) continue;
          ++violations;
          Antispanner asp = build_min_antispanner(g, arbs, candidate, a, cfg.alpha);
          pool.add_row(std::move(asp.arcs));
        }
      }
      if (violations == 0) break;
    }
  } catch (const DeadlineExceeded&) {
    if (deadline.expired()) throw;  // hard timeout; soft exhaustion falls through
  }

  // Safety pass: every arc must end up settled. Unsettled arcs (thin ones the
  // loop never finished, thick ones the sampling missed) get their shortest
  // path spliced in from the out-arborescence of the tail.
  for (int32_t s = 0; s < g.n(); ++s) {
    if (g.out(s).empty()) continue;
    deadline.check();
    dist = arc_dijkstra(g, s, true, kInf, &candidate);
    bool patched = false;
    for (const HalfArc& h : g.out(s)) {
      if (detail::leq_tol(dist[size_t(h.to)], cfg.alpha * arbs.dout(s, h.to))) continue;
      for (int32_t x = h.to; x != s;) {
        int32_t p = arbs.pout(s, x);
        candidate[size_t(p)] = 1;
        x = g.arc(p).u;
      }
      patched = true;
    }
    if (patched) --s;  // rescan the source against the grown arc set
  }
  return candidate;
}

// Undirected entry point: bidirect, run the arc algorithm, keep an edge iff
// either orientation is kept.
inline Spanner berman_spanner(const Graph& g, const BermanConfig& cfg,
                              const Deadline& deadline = Deadline::never()) {
  if (cfg.alpha < 1.0) throw IncompatibleConfig("stretch must be at least 1");
  Spanner h = Spanner::empty(g, cfg.alpha);
  if (g.m() == 0) return h;
  DiGraph dg = DiGraph::from_undirected(g);
  ArcMask r = berman_spanner_arcs(dg, cfg, deadline);
  for (int32_t e = 0; e < g.m(); ++e)
    if (r[size_t(2 * e)] || r[size_t(2 * e + 1)]) h.add(e);
  return h;
}

}  // namespace spanner
