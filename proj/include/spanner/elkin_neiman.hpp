#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "spanner/deadline.hpp"
#include "spanner/graph.hpp"
#include "spanner/mst.hpp"
#include "spanner/rng.hpp"

namespace spanner {

struct EnConfig {
  int32_t alpha = 3;        // odd, >= 3
  double epsilon = 0.8;     // failure-probability knob; beta = ln(3n/eps)/k
  uint64_t seed = 0;
  int32_t max_attempts = 200;
};

enum class EnFailure { none, radius, size };

struct EnResult {
  Spanner spanner;
  int32_t attempts = 0;  // attempts consumed, successful one included
};

namespace detail {

struct EnScratch {
  std::vector<double> r;
  std::vector<double> m;
  std::vector<int32_t> msg_edge;
  std::vector<int32_t> mark_stamp, m_stamp;
  std::vector<int32_t> touched;
  struct QItem {
    int32_t v;
    int32_t depth;
    int32_t edge;  // first edge out of the BFS root, -1 at the root
  };
  std::vector<QItem> queue;

  void init(int32_t n) {
    r.assign(size_t(n), 0.0);
    m.assign(size_t(n), 0.0);
    msg_edge.assign(size_t(n), -1);
    mark_stamp.assign(size_t(n), -1);
    m_stamp.assign(size_t(n), -1);
  }
};

}  // namespace detail

// One sampling attempt. Draws r-values from `rng` in vertex order (aborting
// at the first r_u >= k, so failed attempts consume fewer draws), then runs
// one depth-limited BFS per receiving vertex. Message values use the depth of
// the dequeued vertex, so every stored value is shifted by +1 relative to
// r_u - d(u,x); the shift is uniform and cancels in the max-minus-one rule.
// Vertices sitting one step past the depth limit still receive values, they
// are just never expanded. On success `out` holds the spanner.
inline EnFailure elkin_neiman_attempt(const Graph& g, int32_t alpha, double epsilon,
                                      Rng& rng, int32_t n_components, Spanner* out,
                                      detail::EnScratch* scratch = nullptr) {
  if (g.weighted()) throw IncompatibleConfig("elkin-neiman handles unweighted graphs only");
  if (alpha < 3 || alpha % 2 == 0)
    throw IncompatibleConfig("elkin-neiman needs odd alpha >= 3");
  const int32_t n = g.n();
  const int32_t k = (alpha + 1) / 2;
  detail::EnScratch local;
  detail::EnScratch& s = scratch ? *scratch : local;
  if (int32_t(s.r.size()) != n) s.init(n);

  const double beta = std::log(3.0 * double(n) / epsilon) / double(k);
  for (int32_t u = 0; u < n; ++u) {
    s.r[size_t(u)] = rng.exponential(beta);
    if (s.r[size_t(u)] >= double(k)) return EnFailure::radius;
  }

  Spanner h = Spanner::empty(g, double(alpha));
  int32_t stamp = 0;
  for (int32_t x = 0; x < n; ++x) {
    ++stamp;
    s.touched.clear();
    s.queue.clear();
    s.queue.push_back({x, 0, -1});
    s.mark_stamp[size_t(x)] = stamp;
    for (size_t head = 0; head < s.queue.size(); ++head) {
      auto [y, depth, first_edge] = s.queue[head];
      for (const HalfEdge& he : g.neighbors(y)) {
        int32_t u = he.to;
        if (s.mark_stamp[size_t(u)] == stamp) continue;
        int32_t eu = first_edge < 0 ? he.edge : first_edge;
        if (s.m_stamp[size_t(u)] != stamp) {
          s.m_stamp[size_t(u)] = stamp;
          s.touched.push_back(u);
        }
        s.m[size_t(u)] = s.r[size_t(u)] - double(depth);
        s.msg_edge[size_t(u)] = eu;
        if (depth < k) {
          s.queue.push_back({u, depth + 1, eu});
          s.mark_stamp[size_t(u)] = stamp;
        }
      }
    }
    double max_m = -std::numeric_limits<double>::infinity();
    for (int32_t u : s.touched)
      if (s.m[size_t(u)] > max_m) max_m = s.m[size_t(u)];
    for (int32_t u : s.touched)
      if (s.m[size_t(u)] >= max_m - 1.0) h.add(s.msg_edge[size_t(u)]);
  }

  if (h.size() < n - n_components) return EnFailure::size;
  if (out) *out = std::move(h);
  return EnFailure::none;
}

// Retry wrapper: repeats attempts on one seeded stream until success or the
// attempt budget runs out (then throws AttemptsExhausted).
inline EnResult elkin_neiman(const Graph& g, const EnConfig& cfg,
                             const Deadline& deadline = Deadline::never()) {
  Rng rng(cfg.seed);
  detail::EnScratch scratch;
  const int32_t n_comp = components(g).count;
  EnResult res;
  for (int32_t attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
    deadline.check();
    Spanner out;
    if (elkin_neiman_attempt(g, cfg.alpha, cfg.epsilon, rng, n_comp, &out, &scratch) ==
        EnFailure::none) {
      res.spanner = std::move(out);
      res.attempts = attempt;
      return res;
    }
  }
  throw AttemptsExhausted(cfg.max_attempts);
}

}  // namespace spanner
