#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "spanner/apsp.hpp"
#include "spanner/graph.hpp"
#include "spanner/mst.hpp"

namespace spanner {

struct QualityReport {
  int32_t size = 0;
  double sparseness = 0.0;            // |E'| / |E|, 1 for edgeless parents
  double lightness = 0.0;             // W(E') / W(MSF(G)); size/(n-c) when unweighted
  double mean_degree_spanner = 0.0;   // 2|E'| / n
  double mean_degree_original = 0.0;  // 2|E| / n
  double stretch_mean = 1.0;          // mean over connected pairs of d_H/d_G
  double stretch_max = 1.0;
  double hop_frac_fewer = 0.0;  // fraction of pairs with fewer hops in the spanner
  double hop_frac_equal = 0.0;
  double hop_frac_more = 0.0;
  double hop_mean_diff = 0.0;  // mean of hops_H - hops_G
};

// Quality measures of a spanner against its parent. Pass a precomputed parent
// distance table to skip the first APSP. Pairs disconnected in the parent are
// excluded from stretch/hop statistics.
inline QualityReport measure(const Graph& g, const Spanner& h,
                             const DistanceMatrix* base = nullptr) {
  QualityReport q;
  q.size = h.size();
  q.sparseness = g.m() == 0 ? 1.0 : double(h.size()) / double(g.m());
  double msf = mst_weight(g);
  double hw = h.total_weight();
  q.lightness = msf > 0.0 ? hw / msf : (hw > 0.0 ? kInf : 0.0);
  if (g.n() > 0) {
    q.mean_degree_spanner = 2.0 * double(h.size()) / double(g.n());
    q.mean_degree_original = 2.0 * double(g.m()) / double(g.n());
  }

  DistanceMatrix own;
  if (!base) {
    own = apsp(g);
    base = &own;
  }
  DistanceMatrix hd = apsp(g, &h.mask());

  int64_t pairs = 0, fewer = 0, equal = 0, more = 0;
  double stretch_sum = 0.0, stretch_max = 0.0, hop_sum = 0.0;
  for (int32_t u = 0; u < g.n(); ++u) {
    for (int32_t v = u + 1; v < g.n(); ++v) {
      double dg = base->dist(u, v);
      if (dg == kInf || dg == 0.0) continue;
      ++pairs;
      double ratio = hd.dist(u, v) / dg;
      stretch_sum += ratio;
      stretch_max = std::max(stretch_max, ratio);
      int32_t dh_hops = hd.dist(u, v) == kInf ? g.n() : hd.hops(u, v);
      int32_t diff = dh_hops - base->hops(u, v);
      hop_sum += diff;
      if (diff < 0)
        ++fewer;
      else if (diff == 0)
        ++equal;
      else
        ++more;
    }
  }
  if (pairs > 0) {
    q.stretch_mean = stretch_sum / double(pairs);
    q.stretch_max = stretch_max;
    q.hop_frac_fewer = double(fewer) / double(pairs);
    q.hop_frac_equal = double(equal) / double(pairs);
    q.hop_frac_more = double(more) / double(pairs);
    q.hop_mean_diff = hop_sum / double(pairs);
  }
  return q;
}

struct FieldStats {
  double mean = 0.0;
  double median = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double max = 0.0;
};

inline FieldStats field_stats(std::vector<double> xs) {
  FieldStats s;
  if (xs.empty()) throw std::invalid_argument("empty group");
  std::sort(xs.begin(), xs.end());
  s.min = xs.front();
  s.max = xs.back();
  size_t n = xs.size();
  s.median = n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
  for (double x : xs) s.mean += x;
  s.mean /= double(n);
  for (double x : xs) s.stddev += (x - s.mean) * (x - s.mean);
  s.stddev = n > 1 ? std::sqrt(s.stddev / double(n - 1)) : 0.0;
  return s;
}

struct AggregateReport {
  int64_t count = 0;
  FieldStats size, sparseness, lightness, mean_degree;
  FieldStats stretch_mean;
  FieldStats stretch_max;  // .mean is the "mean max" statistic
  FieldStats hop_mean_diff;
};

inline AggregateReport aggregate(std::span<const QualityReport> reports) {
  if (reports.empty()) throw std::invalid_argument("empty group");
  AggregateReport a;
  a.count = int64_t(reports.size());
  auto pull = [&](auto getter) {
    std::vector<double> xs;
    xs.reserve(reports.size());
    for (const auto& r : reports) xs.push_back(getter(r));
    return field_stats(std::move(xs));
  };
  a.size = pull([](const QualityReport& r) { return double(r.size); });
  a.sparseness = pull([](const QualityReport& r) { return r.sparseness; });
  a.lightness = pull([](const QualityReport& r) { return r.lightness; });
  a.mean_degree = pull([](const QualityReport& r) { return r.mean_degree_spanner; });
  a.stretch_mean = pull([](const QualityReport& r) { return r.stretch_mean; });
  a.stretch_max = pull([](const QualityReport& r) { return r.stretch_max; });
  a.hop_mean_diff = pull([](const QualityReport& r) { return r.hop_mean_diff; });
  return a;
}

}  // namespace spanner
