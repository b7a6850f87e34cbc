#pragma once

#include <cstdint>

#include "spanner/apsp.hpp"
#include "spanner/graph.hpp"

namespace spanner {

struct ValidationReport {
  bool valid = true;
  int32_t worst_u = -1;
  int32_t worst_v = -1;
  double worst_ratio = 0.0;  // d_H / d_G at the worst pair (1.0 for d_G = 0 pairs)
  double d_g = 0.0;
  double d_h = 0.0;
};

// Checks d_H(u,v) <= alpha * d_G(u,v) for every pair. Pairs disconnected in
// the parent are exempt; a pair connected in the parent but not in the
// subgraph fails with ratio infinity. Pass `base` to reuse a precomputed
// distance table of the parent. Comparison allows `tol` relative slack to
// absorb float summation noise (integral weights compare exactly anyway).
inline ValidationReport validate_spanner(const Graph& g, const Spanner& h,
                                         const DistanceMatrix* base = nullptr,
                                         double tol = 1e-9) {
  DistanceMatrix own;
  if (!base) {
    own = apsp(g);
    base = &own;
  }
  DistanceMatrix hd = apsp(g, &h.mask());
  ValidationReport rep;
  const double alpha = h.alpha();
  for (int32_t u = 0; u < g.n(); ++u) {
    for (int32_t v = u + 1; v < g.n(); ++v) {
      double dg = base->dist(u, v);
      if (dg == kInf) continue;
      double dh = hd.dist(u, v);
      double ratio = dg == 0.0 ? 1.0 : dh / dg;
      if (ratio > rep.worst_ratio) {
        rep.worst_ratio = ratio;
        rep.worst_u = u;
        rep.worst_v = v;
        rep.d_g = dg;
        rep.d_h = dh;
      }
      if (dh > alpha * dg * (1.0 + tol)) rep.valid = false;
    }
  }
  return rep;
}

}  // namespace spanner
